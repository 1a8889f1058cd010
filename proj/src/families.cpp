#include "qc2/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qc2/gauss.hpp"
#include "qc2/prng.hpp"

namespace qc2 {

PlaneCurve PlaneCurve::make(MultiPoly B) {
    if (B.num_vars() != 3) throw std::invalid_argument("PlaneCurve: need 3 variables");
    auto d = B.homogeneous_degree();
    if (!d) throw std::invalid_argument("PlaneCurve: need a nonzero homogeneous form");
    if (*d % 2 != 0 || *d == 0) throw std::invalid_argument("PlaneCurve: need even positive degree");
    return PlaneCurve{std::move(B)};
}

PlaneCurve klein_form(const FieldTower& T, int m) {
    if (m < 1) throw std::invalid_argument("klein_form: m >= 1");
    MultiPoly B(T, 1, 3);
    auto e = static_cast<std::uint8_t>(2 * m - 1);
    B.set_coeff(Mono{e, 1, 0}, T.one());
    B.set_coeff(Mono{0, e, 1}, T.one());
    B.set_coeff(Mono{1, 0, e}, T.one());
    return PlaneCurve::make(std::move(B));
}

int StrangeLocus::geometric_count() const {
    int n = 0;
    for (auto& p : points) n += p.ext_degree;
    return n;
}

StrangeLocus strange_points(const PlaneCurve& Bc, int max_ext_degree, std::uint64_t seed) {
    const MultiPoly& B = Bc.B;
    const FieldTower& T = B.tower();
    int d = Bc.degree();
    StrangeLocus out;
    std::vector<MultiPoly> grads{B.partial(0), B.partial(1), B.partial(2)};
    bool all_zero = std::all_of(grads.begin(), grads.end(),
                                [](const MultiPoly& g) { return g.is_zero(); });
    if (all_zero) {
        out.finite = false;  // B is a square, the critical locus is everything
        return out;
    }
    IdealPresentation I;
    I.chart = Chart::Homogeneous;
    I.generators = grads;
    auto sl = scheme_length(I, 24, 4 * (d - 1) * (d - 1) + 8);
    out.finite = sl.finite;
    if (!sl.finite) return out;
    out.length = sl.length;

    for (auto& p : solve_projective_system(grads, max_ext_degree, seed)) {
        IdealPresentation Iloc;
        Iloc.chart = Chart::AffineOrigin;
        for (auto& g : grads) Iloc.generators.push_back(localize_at(g, p));
        auto mult = local_colength(Iloc, 40, 4 * (d - 1) * (d - 1) + 8);
        if (!mult.finite) throw std::logic_error("strange_points: non-isolated critical point");
        out.points.push_back(StrangePoint{p, mult.value, p.orbit_size()});
    }

    // Complete-intersection split certificate in generic coordinates.
    Prng rng(seed ^ 0x57a9ull);
    for (int attempt = 0; attempt < 12 && !out.split_certificate; ++attempt) {
        std::vector<std::vector<FieldElem>> M(3, std::vector<FieldElem>(3, T.zero()));
        int rlvl = 1;
        while (T.order(rlvl) < 16) ++rlvl;
        FieldElem det = T.zero(rlvl);
        do {
            for (auto& row : M)
                for (auto& e : row) e = T.from_bits(rng.below(T.order(rlvl)), rlvl);
            det = M[0][0] * (M[1][1] * M[2][2] + M[1][2] * M[2][1]) +
                  M[0][1] * (M[1][0] * M[2][2] + M[1][2] * M[2][0]) +
                  M[0][2] * (M[1][0] * M[2][1] + M[1][1] * M[2][0]);
        } while (det.is_zero());
        MultiPoly Bh = B.linear_change(M);
        MultiPoly B1 = Bh.partial(0), B2 = Bh.partial(1), B3 = Bh.partial(2);
        MultiPoly x3 = MultiPoly::variable(T, Bh.level(), 3, 2);
        try {
            IdealPresentation ci;
            ci.chart = Chart::Homogeneous;
            ci.generators = {B1, B2};
            auto l_ci = scheme_length(ci, 24, 4 * (d - 1) * (d - 1) + 8);
            if (!l_ci.finite || l_ci.length != (d - 1) * (d - 1)) continue;
            IdealPresentation line;
            line.chart = Chart::Homogeneous;
            line.generators = {B1, B2, x3};
            auto l_line = scheme_length(line, 24);
            if (!l_line.finite || l_line.length != d - 2) continue;
            IdealPresentation meet;
            meet.chart = Chart::Homogeneous;
            meet.generators = {B1, B2, B3, x3};
            auto l_meet = scheme_length(meet, 24);
            if (!l_meet.finite || l_meet.length != 0) continue;
            if ((d - 1) * (d - 1) - (d - 2) != out.length)
                throw std::logic_error("strange_points: split certificate disagrees with length");
            out.split_certificate = true;
        } catch (const CertificationError&) {
            continue;
        }
    }
    return out;
}

std::pair<MultiPoly, MultiPoly> decompose_square(const PlaneCurve& Bc) {
    const MultiPoly& B = Bc.B;
    MultiPoly even(B.tower(), B.level(), 3);
    MultiPoly rest(B.tower(), B.level(), 3);
    for (auto& [m, c] : B.terms()) {
        bool all_even = (m[0] % 2 == 0) && (m[1] % 2 == 0) && (m[2] % 2 == 0);
        (all_even ? even : rest).set_coeff(m, B.tower().from_bits(c, B.level()));
    }
    return {even.square_root(), rest};
}

namespace {

// Pad a plane form into the surface ring (x1, x2, x3, z).
MultiPoly to_surface(const MultiPoly& B) {
    MultiPoly out(B.tower(), B.level(), 4);
    for (auto& [m, c] : B.terms()) {
        Mono e{m[0], m[1], m[2], 0};
        out.set_coeff(e, B.tower().from_bits(c, B.level()));
    }
    return out;
}

ProjPoint project_to_plane(const ProjPoint& p) {
    std::vector<FieldElem> v{p.x[0], p.x[1], p.x[2]};
    return ProjPoint::normalize(std::move(v)).reduced().orbit_canonical();
}

std::vector<std::uint64_t> flat_key(const ProjPoint& p) {
    std::vector<std::uint64_t> k{static_cast<std::uint64_t>(p.level())};
    for (auto& c : p.x) k.push_back(c.bits());
    return k;
}

}  // namespace

QuarticSurface family_a3(const PlaneCurve& B) {
    if (B.degree() != 4) throw std::invalid_argument("family_a3: B must be a quartic");
    const FieldTower& T = B.B.tower();
    MultiPoly F = to_surface(B.B);
    F.set_coeff(Mono{0, 0, 0, 4}, T.one());
    return QuarticSurface::make(std::move(F));
}

VerifyResult verify_a3(const QuarticSurface& X, const PlaneCurve& B, const FindOptions& opt) {
    VerifyResult res;
    res.locus = find_singular_points(X, opt);
    auto sigma = strange_points(B, opt.max_ext_degree, opt.seed);
    res.ok = true;
    if (!res.locus.complete) {
        res.ok = false;
        res.diagnostics.push_back("singular census incomplete at this extension bound");
    }
    if (!sigma.finite) {
        res.ok = false;
        res.diagnostics.push_back("critical locus of B is not finite");
        return res;
    }
    for (auto& sp : sigma.points)
        if (sp.multiplicity != 1) {
            res.ok = false;
            res.diagnostics.push_back("critical locus of B is not reduced");
        }
    if (res.locus.geometric_count() > 7) {
        res.ok = false;
        res.diagnostics.push_back("more than 7 singular points");
    }
    // singular points must biject with the strange points via (x, z) -> x
    std::set<std::vector<std::uint64_t>> proj, strange;
    for (auto& r : res.locus.points) proj.insert(flat_key(project_to_plane(r.point)));
    for (auto& sp : sigma.points) strange.insert(flat_key(sp.point.orbit_canonical()));
    if (proj != strange) {
        res.ok = false;
        res.diagnostics.push_back("singular points do not biject with the strange points of B");
    }
    for (auto& r : res.locus.points) {
        if (r.kind != SingKind::Biplanar || r.defect.infinite || r.defect.value != 4) {
            res.ok = false;
            res.diagnostics.push_back("a singular point is not of type A3");
            break;
        }
    }
    return res;
}

QuarticSurface family_special(const PlaneCurve& B) {
    if (B.degree() != 4) throw std::invalid_argument("family_special: B must be a quartic");
    const FieldTower& T = B.B.tower();
    MultiPoly F = to_surface(B.B);
    F.set_coeff(Mono{0, 0, 0, 4}, T.one());
    F.set_coeff(Mono{2, 0, 0, 2}, T.one());
    return QuarticSurface::make(std::move(F));
}

VerifyResult verify_special(const QuarticSurface& X, const PlaneCurve& B, const FindOptions& opt) {
    VerifyResult res;
    res.locus = find_singular_points(X, opt);
    auto sigma = strange_points(B, opt.max_ext_degree, opt.seed);
    res.ok = true;
    if (!res.locus.complete) {
        res.ok = false;
        res.diagnostics.push_back("singular census incomplete at this extension bound");
    }
    if (!sigma.finite) {
        res.ok = false;
        res.diagnostics.push_back("critical locus of B is not finite");
        return res;
    }
    for (auto& sp : sigma.points)
        if (sp.multiplicity != 1) {
            res.ok = false;
            res.diagnostics.push_back("critical locus of B is not reduced");
        }
    for (auto& sp : sigma.points)
        if (sp.point.x[0].is_zero()) {
            res.ok = false;
            res.diagnostics.push_back("the line x1 = 0 meets the strange points");
        }
    if (res.locus.geometric_count() != 14) {
        res.ok = false;
        res.diagnostics.push_back("expected 14 singular points");
    }
    for (auto& r : res.locus.points)
        if (r.kind != SingKind::Node || r.defect.infinite || r.defect.value != 2) {
            res.ok = false;
            res.diagnostics.push_back("a singular point is not a node");
            break;
        }
    if (res.ok && res.locus.defect_sum() != 28) {
        res.ok = false;
        res.diagnostics.push_back("defect sum is not 28");
    }
    if (dual_plane_kernel(X).size() != 1) {
        res.ok = false;
        res.diagnostics.push_back("dual surface is not a plane");
    }
    return res;
}

QuarticSurface family_insep(const PlaneCurve& B) {
    if (B.degree() != 4) throw std::invalid_argument("family_insep: B must be a quartic");
    const FieldTower& T = B.B.tower();
    MultiPoly F = to_surface(B.B);
    F.set_coeff(Mono{1, 1, 0, 2}, T.one());
    F.set_coeff(Mono{0, 0, 2, 2}, T.one());
    return QuarticSurface::make(std::move(F));
}

InsepReport verify_insep(const QuarticSurface& X, const PlaneCurve& Bc, const FindOptions& opt) {
    InsepReport rep;
    const FieldTower& T = Bc.B.tower();
    int lvl = Bc.B.level();
    const MultiPoly& B = Bc.B;
    MultiPoly Q(T, lvl, 3);
    Q.set_coeff(Mono{1, 1, 0}, T.one());
    Q.set_coeff(Mono{0, 0, 2}, T.one());
    MultiPoly B1 = B.partial(0), B2 = B.partial(1), B3 = B.partial(2);
    MultiPoly x1 = MultiPoly::variable(T, lvl, 3, 0);
    MultiPoly x2 = MultiPoly::variable(T, lvl, 3, 1);
    MultiPoly x3 = MultiPoly::variable(T, lvl, 3, 2);
    MultiPoly g1 = B * x2 + B1 * Q;  // rows of the Hilbert-Burch matrix
    MultiPoly g2 = B * x1 + B2 * Q;
    MultiPoly g3 = x3 * B3;
    auto [q, Bp] = decompose_square(Bc);
    rep.ok = true;

    auto length_of = [&](std::vector<MultiPoly> gens, const char* what) -> int {
        IdealPresentation I;
        I.chart = Chart::Homogeneous;
        I.generators = std::move(gens);
        try {
            auto r = scheme_length(I, 26, 200);
            if (!r.finite) {
                rep.ok = false;
                rep.diagnostics.push_back(std::string(what) + ": scheme not finite");
                return -1;
            }
            return r.length;
        } catch (const CertificationError&) {
            rep.ok = false;
            rep.diagnostics.push_back(std::string(what) + ": length not certified");
            return -1;
        }
    };

    rep.len_base = length_of({Q, B}, "base locus {Q = B = 0}");
    if (q.is_zero()) {
        rep.ok = false;
        rep.diagnostics.push_back("square part of B vanishes; the line scheme is not finite");
    } else {
        rep.len_line = length_of({x3, q * q}, "line scheme {x3 = q^2 = 0}");
        int alt = length_of({x3, g1, g2}, "line scheme via Hilbert-Burch rows");
        if (alt != rep.len_line) {
            rep.ok = false;
            rep.diagnostics.push_back("line scheme presentations disagree");
        }
    }
    rep.len_hb = length_of({g1, g2, g3}, "Hilbert-Burch scheme");
    int meet = length_of({x3, g1, g2, B3}, "intersection of line and residual schemes");
    rep.disjoint = (meet == 0);
    if (!rep.disjoint) {
        rep.ok = false;
        rep.diagnostics.push_back("line and residual schemes are not disjoint");
    }
    if (rep.len_hb >= 0 && rep.len_line >= 0 && rep.disjoint)
        rep.len_s = rep.len_hb - rep.len_line;

    rep.locus = find_singular_points(X, opt);
    if (!rep.locus.complete) {
        rep.ok = false;
        rep.diagnostics.push_back("singular census incomplete at this extension bound");
    }
    if (rep.locus.geometric_count() > 14) {
        rep.ok = false;
        rep.diagnostics.push_back("more than 14 singular points");
    }
    ProjPoint center = ProjPoint::normalize({T.zero(), T.zero(), T.zero(), T.one()});
    for (auto& r : rep.locus.points)
        if (r.point == center && r.kind == SingKind::Node) rep.node_at_center = true;
    if (!rep.node_at_center) {
        rep.ok = false;
        rep.diagnostics.push_back("no node at x = 0");
    }
    if (rep.len_base != 8 || rep.len_line != 4 || rep.len_hb != 17 || rep.len_s != 13) {
        rep.ok = false;
        rep.diagnostics.push_back("scheme lengths differ from (8, 4, 17, 13)");
    }
    return rep;
}

QuarticSurface family_dual_plane(const FieldElem& lambda, const PlaneCurve& B) {
    if (B.degree() != 4) throw std::invalid_argument("family_dual_plane: B must be a quartic");
    const FieldTower& T = B.B.tower();
    MultiPoly F = to_surface(B.B);
    F.set_coeff(Mono{0, 0, 0, 4}, T.one());
    F.set_coeff(Mono{1, 1, 0, 2}, T.one());
    F.add_term(Mono{0, 0, 2, 2}, lambda);
    return QuarticSurface::make(std::move(F));
}

VerifyResult verify_dual_plane(const QuarticSurface& X, const PlaneCurve& B,
                               const FindOptions& opt) {
    (void)B;
    VerifyResult res;
    res.locus = find_singular_points(X, opt);
    res.ok = true;
    if (!res.locus.complete) {
        res.ok = false;
        res.diagnostics.push_back("singular census incomplete at this extension bound");
    }
    if (res.locus.geometric_count() > 14) {
        res.ok = false;
        res.diagnostics.push_back("more than 14 singular points");
    }
    if (dual_plane_kernel(X).size() != 1) {
        res.ok = false;
        res.diagnostics.push_back("dual surface is not a plane");
    }
    if (res.locus.geometric_count() == 14)
        for (auto& r : res.locus.points)
            if (r.kind != SingKind::Node) {
                res.ok = false;
                res.diagnostics.push_back("14 singular points but not all nodes");
                break;
            }
    return res;
}

int dual_plane_excess(const FieldElem& lambda, const PlaneCurve& Bc) {
    const FieldTower& T = Bc.B.tower();
    int lvl = std::lcm(Bc.B.level(), lambda.level());
    MultiPoly B = Bc.B.lift(lvl);
    MultiPoly Q(T, lvl, 3);
    Q.set_coeff(Mono{1, 1, 0}, T.one());
    Q.add_term(Mono{0, 0, 2}, lambda);
    MultiPoly B1 = B.partial(0), B3 = B.partial(2);
    MultiPoly x2 = MultiPoly::variable(T, lvl, 3, 1);
    MultiPoly G = B1 * B1 + B1 * x2 * Q + B * x2 * x2;
    // P' = { x2 = b31 x3^2 + b13 x1^2 = 0 }: read b31, b13 off the non-square
    // part of B
    auto [q, Bp] = decompose_square(Bc);
    FieldElem b13 = Bp.coeff(Mono{3, 0, 1});
    FieldElem b31 = Bp.coeff(Mono{1, 0, 3});
    if (b31.is_zero())
        throw std::invalid_argument("dual_plane_excess: distinguished point undefined (b31 = 0)");
    FieldElem s = (b13 * b31.inv()).sqrt();
    ProjPoint Pp = ProjPoint::normalize({T.one(lvl).lift(std::lcm(lvl, s.level())),
                                         T.zero(std::lcm(lvl, s.level())),
                                         s.lift(std::lcm(lvl, s.level()))});
    IdealPresentation I;
    I.chart = Chart::AffineOrigin;
    I.generators = {localize_at(B3, Pp), localize_at(G, Pp)};
    auto r = local_colength(I, 40, 64);
    if (!r.finite) throw std::logic_error("dual_plane_excess: intersection not isolated at P'");
    return r.value;
}

PlaneCurve seeded_general_quartic(const FieldTower& T, std::uint64_t seed) {
    Prng rng(seed);
    MultiPoly q(T, 1, 3);
    do {
        q = MultiPoly(T, 1, 3);
        for (auto& m : monomials_of_degree(3, 2))
            q.set_coeff(m, T.from_bits(rng.below(T.order(1)), 1));
    } while (q.is_zero());
    return PlaneCurve::make(klein_form(T, 2).B + q * q);
}

}  // namespace qc2
