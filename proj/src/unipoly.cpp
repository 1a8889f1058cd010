#include "qc2/unipoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qc2/prng.hpp"
#include <stdexcept>

namespace qc2 {

UniPoly UniPoly::constant(const FieldElem& a) {
    UniPoly p(a.tower(), a.level());
    if (!a.is_zero()) p.c_ = {a.bits()};
    return p;
}

UniPoly UniPoly::monomial(const FieldTower& t, int level, int k, std::uint64_t coeff) {
    UniPoly p(t, level);
    if (coeff) {
        p.c_.assign(k + 1, 0);
        p.c_[k] = coeff;
    }
    return p;
}

FieldElem UniPoly::coeff(int i) const { return tower_->from_bits(coeff_bits(i), level_); }

void UniPoly::set_coeff(int i, const FieldElem& a) {
    FieldElem v = a;
    if (a.level() != level_) {
        if (level_ % a.level() == 0) {
            v = a.lift(level_);
        } else if (a.level() % level_ == 0) {
            auto d = a.descend(level_);
            if (!d) throw std::invalid_argument("UniPoly::set_coeff: value not in coefficient field");
            v = *d;
        } else {
            throw std::invalid_argument("UniPoly::set_coeff: incompatible level");
        }
    }
    if (i >= static_cast<int>(c_.size())) {
        if (v.is_zero()) return;
        c_.resize(i + 1, 0);
    }
    c_[i] = v.bits();
    trim();
}

int UniPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) return static_cast<int>(i);
    return std::numeric_limits<int>::max();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    if (tower_ != o.tower_) throw std::invalid_argument("UniPoly: mixed towers");
    if (level_ != o.level_) {
        int l = std::lcm(level_, o.level_);
        return lift(l) + o.lift(l);
    }
    UniPoly r(*tower_, level_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = (i < c_.size() ? c_[i] : 0) ^ (i < o.c_.size() ? o.c_[i] : 0);
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (tower_ != o.tower_) throw std::invalid_argument("UniPoly: mixed towers");
    if (level_ != o.level_) {
        int l = std::lcm(level_, o.level_);
        return lift(l) * o.lift(l);
    }
    UniPoly r(*tower_, level_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] ^= tower_->mul_raw(level_, c_[i], o.c_[j]);
    }
    r.trim();
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const {
    if (tower_ != o.tower_) return false;
    if (level_ != o.level_) {
        int l = std::lcm(level_, o.level_);
        return lift(l) == o.lift(l);
    }
    return c_ == o.c_;
}

UniPoly UniPoly::scale(const FieldElem& a) const {
    if (a.level() != level_) {
        int l = std::lcm(level_, a.level());
        return lift(l).scale(a.lift(l));
    }
    UniPoly r = *this;
    for (auto& cc : r.c_) cc = tower_->mul_raw(level_, cc, a.bits());
    r.trim();
    return r;
}

UniPoly UniPoly::shift_up(int k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly r(*tower_, level_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

UniPoly UniPoly::shift_down(int k) const {
    if (is_zero() || k == 0) return *this;
    if (valuation() < k) throw std::invalid_argument("UniPoly::shift_down: not divisible by t^k");
    UniPoly r(*tower_, level_);
    r.c_.assign(c_.begin() + k, c_.end());
    r.trim();
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r(*tower_, level_);
    if (degree() < 1) return r;
    r.c_.assign(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i)
        if (i & 1) r.c_[i - 1] = c_[i];  // even exponents die in characteristic 2
    r.trim();
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scale(coeff(degree()).inv());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("UniPoly: division by zero");
    if (tower_ != d.tower_) throw std::invalid_argument("UniPoly: mixed towers");
    if (level_ != d.level_) {
        int l = std::lcm(level_, d.level_);
        return lift(l).divmod(d.lift(l));
    }
    UniPoly q(*tower_, level_), r = *this;
    int dd = d.degree();
    if (r.degree() < dd) return {q, r};
    q.c_.assign(r.degree() - dd + 1, 0);
    std::uint64_t lead_inv = tower_->inv_raw(level_, d.c_[dd]);
    while (r.degree() >= dd) {
        int dr = r.degree();
        std::uint64_t f = tower_->mul_raw(level_, r.c_[dr], lead_inv);
        q.c_[dr - dd] = f;
        for (int i = 0; i <= dd; ++i)
            r.c_[dr - dd + i] ^= tower_->mul_raw(level_, f, d.c_[i]);
        r.trim();
    }
    q.trim();
    return {q, r};
}

FieldElem UniPoly::eval(const FieldElem& x) const {
    int l = std::lcm(std::lcm(level_, x.level()), 1);
    FieldElem acc = tower_->zero(l);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeff(i);
    return acc;
}

UniPoly UniPoly::translate(const FieldElem& a) const {
    if (a.level() != level_) {
        int l = std::lcm(level_, a.level());
        return lift(l).translate(a.lift(l));
    }
    UniPoly shift = UniPoly::var(*tower_, level_);
    shift.set_coeff(0, a);
    UniPoly acc(*tower_, level_);
    for (int i = degree(); i >= 0; --i) {
        acc = acc * shift;
        acc.set_coeff(0, acc.coeff(0) + coeff(i));
    }
    return acc;
}

UniPoly UniPoly::reverse(int d) const {
    if (d < degree()) throw std::invalid_argument("UniPoly::reverse: d below degree");
    UniPoly r(*tower_, level_);
    if (is_zero()) return r;
    r.c_.assign(d + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[d - i] = c_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::lift(int target) const {
    if (target == level_) return *this;
    UniPoly r(*tower_, target);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = tower_->lift_raw(level_, target, c_[i]);
    r.trim();
    return r;
}

UniPoly UniPoly::scale_var(const FieldElem& cv) const {
    if (cv.level() != level_) {
        int l = std::lcm(level_, cv.level());
        return lift(l).scale_var(cv.lift(l));
    }
    UniPoly r = *this;
    FieldElem p = tower_->one(level_);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] = tower_->mul_raw(level_, r.c_[i], p.bits());
        p = p * cv;
    }
    r.trim();
    return r;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    if (x.level() != y.level()) {
        int l = std::lcm(x.level(), y.level());
        x = x.lift(l);
        y = y.lift(l);
    }
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

FieldElem resultant(const UniPoly& a0, const UniPoly& b0) {
    const FieldTower& T = a0.tower();
    int lvl = std::lcm(a0.level(), b0.level());
    UniPoly a = a0.lift(lvl), b = b0.lift(lvl);
    if (a.is_zero() || b.is_zero()) return T.zero(lvl);
    FieldElem acc = T.one(lvl);
    if (a.degree() < b.degree()) std::swap(a, b);
    for (;;) {
        if (b.degree() == 0)
            return acc * b.coeff(0).pow(static_cast<std::uint64_t>(a.degree()));
        UniPoly r = a % b;
        if (r.is_zero()) return T.zero(lvl);
        acc = acc * b.coeff(b.degree()).pow(static_cast<std::uint64_t>(a.degree() - r.degree()));
        a = b;
        b = r;
    }
}

namespace {

// p must be a polynomial in t^2; coefficient-wise square root.
UniPoly poly_sqrt(const UniPoly& p) {
    const FieldTower& T = p.tower();
    UniPoly r(T, p.level());
    for (int i = 0; i <= p.degree(); ++i) {
        if (i & 1) {
            if (p.coeff_bits(i)) throw std::logic_error("poly_sqrt: odd coefficient present");
            continue;
        }
        r.set_coeff(i / 2, p.coeff(i).sqrt());
    }
    return r;
}

void sqfree_rec(const UniPoly& f, int mult_scale, std::vector<std::pair<UniPoly, int>>& out) {
    if (f.degree() <= 0) return;
    UniPoly fp = f.derivative();
    if (fp.is_zero()) {
        sqfree_rec(poly_sqrt(f), 2 * mult_scale, out);
        return;
    }
    UniPoly g = gcd(f, fp);
    UniPoly w = (f / g).monic();
    int i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, g);
        UniPoly z = (w / y).monic();
        if (z.degree() > 0) out.emplace_back(z, i * mult_scale);
        ++i;
        w = y;
        g = (g / y).monic();
    }
    if (g.degree() > 0) sqfree_rec(poly_sqrt(g), 2 * mult_scale, out);
}

// Equal-degree splitting (all irreducible factors of degree k) by the
// characteristic-2 trace method. The separating elements u are drawn from a
// fixed-seed sequence, so factorization output is deterministic.
void edf(const UniPoly& g, int k, std::vector<UniPoly>& out) {
    if (g.degree() <= 0) return;
    if (g.degree() == k) {
        out.push_back(g.monic());
        return;
    }
    const FieldTower& T = g.tower();
    int lvl = g.level();
    int nk = T.m() * lvl * k;
    std::uint64_t q = T.order(lvl);
    Prng rng(0xedf0edf0ull + static_cast<std::uint64_t>(g.degree()) * 131 + k);
    for (int guard = 0;; ++guard) {
        if (guard > 64 * nk + 512) throw std::logic_error("edf: no separating trace");
        // random u with deg u < deg g; T(u) = sum u^(2^i) is constant in GF(2)
        // on each irreducible factor, and the constants separate factors.
        UniPoly u(T, lvl);
        for (int i = 0; i < g.degree(); ++i) u.set_coeff(i, T.from_bits(rng.below(q), lvl));
        u = u % g;
        UniPoly acc = u;
        for (int i = 1; i < nk; ++i) {
            u = (u * u) % g;
            acc += u;
        }
        if (!acc.is_zero()) {
            UniPoly c = gcd(g, acc);
            if (c.degree() > 0 && c.degree() < g.degree()) {
                edf(c, k, out);
                edf((g / c).monic(), k, out);
                return;
            }
        }
    }
}

}  // namespace

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    sqfree_rec(p.monic(), 1, out);
    return out;
}

std::vector<std::pair<UniPoly, int>> factorize(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    const FieldTower& T = p.tower();
    int lvl = p.level();
    int n = T.m() * lvl;
    for (auto& [sq, mult] : squarefree_decomposition(p)) {
        UniPoly g = sq;
        UniPoly frob = UniPoly::var(T, lvl) % g;
        UniPoly x = UniPoly::var(T, lvl);
        for (int k = 1; 2 * k <= g.degree(); ++k) {
            for (int i = 0; i < n; ++i) frob = (frob * frob) % g;
            UniPoly d = gcd(g, frob + x);
            if (d.degree() > 0) {
                std::vector<UniPoly> irr;
                edf(d, k, irr);
                for (auto& f : irr) out.emplace_back(f, mult);
                g = (g / d).monic();
                if (g.degree() == 0) break;
                frob = frob % g;
            }
        }
        if (g.degree() > 0) out.emplace_back(g.monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.raw() < b.first.raw();
    });
    return out;
}

std::vector<UniRoot> uni_roots(const UniPoly& p, int max_ext_degree) {
    if (p.is_zero()) throw std::invalid_argument("uni_roots: zero polynomial");
    const FieldTower& T = p.tower();
    int lvl = p.level();
    std::vector<UniRoot> out;
    if (p.degree() == 0) return out;
    int n = T.m() * lvl;
    for (auto& [sq, mult] : squarefree_decomposition(p)) {
        UniPoly g = sq;
        UniPoly frob = UniPoly::var(T, lvl) % g;
        UniPoly x = UniPoly::var(T, lvl);
        for (int k = 1; k <= std::max(1, max_ext_degree) && g.degree() >= k; ++k) {
            if (lvl * k > T.max_level()) break;
            for (int i = 0; i < n; ++i) frob = (frob * frob) % g;
            UniPoly d = gcd(g, frob + x);
            if (d.degree() > 0) {
                int big = lvl * k;
                UniPoly dl = d.lift(big);
                std::vector<UniPoly> lin;
                edf(dl, 1, lin);
                for (auto& f : lin) {
                    FieldElem r = f.coeff(0);  // monic t + r, characteristic 2
                    FieldElem rn = r.normalized();
                    if (rn.level() <= max_ext_degree) out.push_back(UniRoot{rn, mult, rn.level()});
                }
                g = (g / d).monic();
                if (g.degree() == 0) break;
                frob = frob % g;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const UniRoot& a, const UniRoot& b) {
        if (a.ext_degree != b.ext_degree) return a.ext_degree < b.ext_degree;
        return a.root.bits() < b.root.bits();
    });
    return out;
}

}  // namespace qc2
