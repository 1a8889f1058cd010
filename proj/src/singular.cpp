#include "qc2/singular.hpp"
#include <map>

#include <algorithm>
#include <numeric>

#include "qc2/prng.hpp"

namespace qc2 {

QuarticSurface QuarticSurface::make(MultiPoly F) {
    if (F.num_vars() != 4) throw std::invalid_argument("QuarticSurface: need 4 variables");
    auto d = F.homogeneous_degree();
    if (!d || *d != 4) throw std::invalid_argument("QuarticSurface: need homogeneous degree 4");
    if (F.is_perfect_square())
        throw NonNormalError("QuarticSurface: F is the square of a quadric (non-reduced surface)");
    return QuarticSurface{std::move(F)};
}

IdealPresentation singular_ideal(const QuarticSurface& X) {
    IdealPresentation I;
    I.chart = Chart::Homogeneous;
    I.generators.push_back(X.F);
    for (int i = 0; i < 4; ++i) I.generators.push_back(X.F.partial(i));
    return I;
}

MultiPoly local_equation(const QuarticSurface& X, const ProjPoint& P) {
    return localize_at(X.F, P);
}

namespace {

std::uint64_t point_hash(const ProjPoint& P) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull * (P.level() + 1);
    for (auto& c : P.x) {
        std::uint64_t z = c.bits() + 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        h ^= z ^ (z >> 31);
        h *= 0xd1342543de82ef95ull;
    }
    return h;
}

}  // namespace

SingKind classify_quadric_part(const QuarticSurface& X, const ProjPoint& P) {
    MultiPoly f = local_equation(X, P);
    if (!f.graded_part(0).is_zero() || !f.graded_part(1).is_zero())
        throw std::invalid_argument("classify_quadric_part: point is not singular on X");
    MultiPoly q = f.graded_part(2);
    if (q.is_zero()) return SingKind::TripleOrWorse;
    const FieldTower& T = f.tower();
    int lvl = f.level();
    bool has_cross = false;
    for (auto& [m, c] : q.terms()) {
        int nz = 0;
        for (auto e : m)
            if (e) ++nz;
        if (nz == 2) has_cross = true;
    }
    if (!has_cross) return SingKind::Uniplanar;  // pure squares: a double plane
    // Alternating bilinear form of q; a cross term forces rank 2.
    std::vector<std::vector<std::uint64_t>> B(3, std::vector<std::uint64_t>(3, 0));
    for (auto& [m, c] : q.terms()) {
        int a = -1, b = -1;
        for (int i = 0; i < 3; ++i)
            if (m[i] == 1) (a < 0 ? a : b) = i;
        if (a >= 0 && b >= 0) B[a][b] = B[b][a] = c;
    }
    auto ns = nullspace(T, lvl, B, 3);
    if (ns.size() != 1) throw std::logic_error("classify_quadric_part: unexpected quadric kernel");
    std::vector<FieldElem> s;
    for (int i = 0; i < 3; ++i) s.push_back(T.from_bits(ns[0][i], lvl));
    return q.eval(s).is_zero() ? SingKind::Biplanar : SingKind::Node;
}

DefectResult gaussian_defect(const QuarticSurface& X, const ProjPoint& P, int trials,
                             std::uint64_t seed, int colength_cap) {
    MultiPoly f = local_equation(X, P);
    if (!f.graded_part(0).is_zero() || !f.graded_part(1).is_zero())
        throw std::invalid_argument("gaussian_defect: point is not singular on X");
    const FieldTower& T = f.tower();
    // sample the coordinate changes over a field with at least 16 elements
    int rlvl = f.level();
    while (T.order(rlvl) < 16 || rlvl % f.level() != 0) ++rlvl;
    Prng rng(seed ^ point_hash(P));

    // rank of the span of the three partials; a generic pair should reach
    // min(rank, 2), otherwise the trial is resampled
    auto poly_span_rank = [&](const std::vector<MultiPoly>& polys) {
        std::map<Mono, int> cols;
        for (auto& p : polys)
            for (auto& [m, c] : p.terms()) cols.emplace(m, 0);
        int idx = 0;
        for (auto& [m, v] : cols) v = idx++;
        std::vector<std::vector<std::uint64_t>> rows;
        int lvl = 1;
        for (auto& p : polys) lvl = std::lcm(lvl, p.level());
        for (auto& p : polys) {
            std::vector<std::uint64_t> row(cols.size(), 0);
            MultiPoly pl = p.lift(lvl);
            for (auto& [m, c] : pl.terms()) row[cols.at(m)] = c;
            rows.push_back(std::move(row));
        }
        return gauss_rank(T, lvl, rows);
    };
    int full_rank = poly_span_rank({f.partial(0), f.partial(1), f.partial(2)});

    DefectResult out;
    out.infinite = true;
    std::vector<int> values;
    for (int t = 0; t < std::max(trials, 1); ++t) {
        MultiPoly g(T, rlvl, 3);
        for (int tries = 0;; ++tries) {
            if (tries > 200) throw std::logic_error("gaussian_defect: no usable change found");
            std::vector<std::vector<FieldElem>> M(3, std::vector<FieldElem>(3, T.zero(rlvl)));
            for (auto& row : M)
                for (auto& e : row) e = T.from_bits(rng.below(T.order(rlvl)), rlvl);
            FieldElem det = M[0][0] * (M[1][1] * M[2][2] + M[1][2] * M[2][1]) +
                            M[0][1] * (M[1][0] * M[2][2] + M[1][2] * M[2][0]) +
                            M[0][2] * (M[1][0] * M[2][1] + M[1][1] * M[2][0]);
            if (det.is_zero()) continue;
            g = f.linear_change(M);
            if (full_rank >= 2 && poly_span_rank({g.partial(0), g.partial(1)}) < 2)
                continue;  // pair degenerate for this change, try another
            break;
        }
        IdealPresentation I;
        I.chart = Chart::AffineOrigin;
        I.generators = {g, g.partial(0), g.partial(1)};
        auto r = local_colength(I, colength_cap, colength_cap + 10);
        if (r.finite) {
            out.infinite = false;
            values.push_back(r.value);
        }
    }
    if (out.infinite) return out;
    out.value = *std::min_element(values.begin(), values.end());
    out.stable =
        static_cast<int>(values.size()) == std::max(trials, 1) &&
        std::all_of(values.begin(), values.end(), [&](int v) { return v == values.front(); });
    return out;
}

int an_index(const SingularPointRecord& rec) {
    if (rec.kind != SingKind::Node && rec.kind != SingKind::Biplanar)
        throw std::invalid_argument("an_index: only nodes and biplanar points carry A_n indices");
    if (rec.defect.infinite) throw std::invalid_argument("an_index: defect not finite");
    return rec.defect.value - 1;
}

SingularLocusReport find_singular_points(const QuarticSurface& X, const FindOptions& opt) {
    IdealPresentation Isg = singular_ideal(X);
    auto sl = scheme_length(Isg, opt.scheme_d_max, opt.bail_bound);
    if (!sl.finite)
        throw NonNormalError("find_singular_points: singular locus is positive-dimensional");

    SingularLocusReport rep;
    rep.total_length = sl.length;
    if (sl.length == 0) {
        rep.complete = true;
        return rep;
    }

    auto pts = solve_projective_system(Isg.generators, opt.max_ext_degree, opt.seed, opt.strategy);

    for (auto& p : pts) {
        SingularPointRecord r;
        r.point = p;
        r.ext_degree = p.orbit_size();
        IdealPresentation Iloc;
        Iloc.chart = Chart::AffineOrigin;
        for (auto& g : Isg.generators) Iloc.generators.push_back(localize_at(g, p));
        auto ll = local_colength(Iloc, opt.colength_cap, 50);
        if (!ll.finite)
            throw NonNormalError("find_singular_points: non-isolated point in singular locus");
        r.local_length = ll.value;
        r.kind = classify_quadric_part(X, p);
        r.defect = gaussian_defect(X, p, opt.defect_trials, opt.seed, opt.colength_cap);
        if ((r.kind == SingKind::Node || r.kind == SingKind::Biplanar) && !r.defect.infinite)
            r.an_index = r.defect.value - 1;
        switch (r.kind) {
            case SingKind::Node:
            case SingKind::Biplanar:
                r.rdp_status = RdpStatus::RDP;
                break;
            case SingKind::Uniplanar:
                r.rdp_status = (!r.defect.infinite && r.defect.value <= 9) ? RdpStatus::RDP_BY_DEFECT
                                                                           : RdpStatus::UNKNOWN;
                break;
            default:
                r.rdp_status = RdpStatus::UNKNOWN;
        }
        rep.points.push_back(std::move(r));
    }

    long long length_sum = 0;
    for (auto& r : rep.points) {
        length_sum += static_cast<long long>(r.ext_degree) * r.local_length;
        switch (r.kind) {
            case SingKind::Node:
                rep.nu += r.ext_degree;
                break;
            case SingKind::Biplanar:
                rep.nu += r.ext_degree;
                rep.b += r.ext_degree;
                break;
            case SingKind::Uniplanar:
                rep.nu += r.ext_degree;
                rep.u += r.ext_degree;
                break;
            case SingKind::TripleOrWorse:
                rep.triple_or_worse += r.ext_degree;
                break;
        }
    }
    rep.complete = (length_sum == rep.total_length);
    return rep;
}

long long SingularLocusReport::defect_sum() const {
    long long s = 0;
    for (auto& r : points)
        if (!r.defect.infinite) s += static_cast<long long>(r.ext_degree) * r.defect.value;
    return s;
}

bool SingularLocusReport::any_defect_infinite() const {
    for (auto& r : points)
        if (r.defect.infinite) return true;
    return false;
}

}  // namespace qc2
