#include "qc2/point.hpp"

#include <numeric>

namespace qc2 {

ProjPoint ProjPoint::normalize(std::vector<FieldElem> coords) {
    if (coords.empty()) throw std::invalid_argument("ProjPoint: empty coordinates");
    int lvl = 1;
    for (auto& c : coords) lvl = std::lcm(lvl, c.level());
    for (auto& c : coords) c = c.lift(lvl);
    int first = -1;
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) throw std::invalid_argument("ProjPoint: zero vector");
    FieldElem inv = coords[first].inv();
    for (auto& c : coords) c = c * inv;
    ProjPoint p;
    p.x = std::move(coords);
    return p;
}

int ProjPoint::chart_index() const {
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) return static_cast<int>(i);
    throw std::logic_error("ProjPoint: zero vector");
}

ProjPoint ProjPoint::reduced() const {
    int lvl = level();
    for (int d = 1; d <= lvl; ++d) {
        if (lvl % d) continue;
        bool ok = true;
        std::vector<FieldElem> down;
        for (auto& c : x) {
            auto dc = c.descend(d);
            if (!dc) {
                ok = false;
                break;
            }
            down.push_back(*dc);
        }
        if (ok) {
            ProjPoint p;
            p.x = std::move(down);
            return p;
        }
    }
    return *this;
}

ProjPoint ProjPoint::frobenius() const {
    ProjPoint p;
    for (auto& c : x) p.x.push_back(c.frobenius_base());
    return p;
}

int ProjPoint::orbit_size() const {
    ProjPoint cur = frobenius();
    int n = 1;
    while (!(cur == *this)) {
        cur = cur.frobenius();
        ++n;
        if (n > 128) throw std::logic_error("ProjPoint: orbit does not close");
    }
    return n;
}

ProjPoint ProjPoint::orbit_canonical() const {
    auto key = [](const ProjPoint& p) {
        std::vector<std::uint64_t> k;
        for (auto& c : p.x) k.push_back(c.bits());
        return k;
    };
    ProjPoint best = *this;
    auto bk = key(best);
    ProjPoint cur = frobenius();
    while (!(cur == *this)) {
        auto ck = key(cur);
        if (ck < bk) {
            best = cur;
            bk = ck;
        }
        cur = cur.frobenius();
    }
    return best;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (x.size() != o.x.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (!(x[i] == o.x[i])) return false;
    return true;
}

MultiPoly localize_at(const MultiPoly& G, const ProjPoint& P) {
    int c = P.chart_index();
    int lvl = std::lcm(G.level(), P.level());
    MultiPoly f = G.lift(lvl).eval_var(c, P.x[c].lift(lvl));  // chart coordinate = 1
    int k = 0;
    for (size_t i = 0; i < P.x.size(); ++i) {
        if (static_cast<int>(i) == c) continue;
        f = f.translate_var(k, P.x[i].lift(lvl));
        ++k;
    }
    return f;
}

}  // namespace qc2
