#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc2/families.hpp"
#include "qc2/gauss.hpp"
#include "qc2/prng.hpp"

using namespace qc2;

TEST_CASE("klein_form matches its defining formula") {
    const FieldTower& T = FieldTower::make(2);
    PlaneCurve k2 = klein_form(T, 2);
    MultiPoly want(T, 1, 3);
    want.set_coeff(Mono{3, 1, 0}, T.one());
    want.set_coeff(Mono{0, 3, 1}, T.one());
    want.set_coeff(Mono{1, 0, 3}, T.one());
    CHECK(k2.B == want);
    CHECK(klein_form(T, 1).degree() == 2);
    CHECK(klein_form(T, 3).degree() == 6);
    CHECK(klein_form(T, 3).B.coeff(Mono{5, 1, 0}).is_one());
}

TEST_CASE("strange points of the Klein quartic: 7 reduced points of the stated shape") {
    const FieldTower& T = FieldTower::make(3);
    auto sigma = strange_points(klein_form(T, 2), 2, 1);
    CHECK(sigma.finite);
    CHECK(sigma.length == 7);
    CHECK(sigma.split_certificate);
    CHECK(sigma.geometric_count() == 7);
    for (auto& sp : sigma.points) {
        CHECK(sp.multiplicity == 1);
        // every point scales to (eps, 1, eps^3) with eps^7 = 1, rational
        // over GF(8) = level 1 here
        CHECK(sp.point.level() == 1);
        REQUIRE(!sp.point.x[1].is_zero());
        FieldElem inv = sp.point.x[1].inv();
        FieldElem eps = sp.point.x[0] * inv;
        FieldElem third = sp.point.x[2] * inv;
        CHECK(eps.pow(7).is_one());
        CHECK(third == eps.pow(3));
    }
}

TEST_CASE("strange locus length matches (d-1)(d-2)+1 for d = 2, 4, 6") {
    const FieldTower& T = FieldTower::make(3);
    // smooth conic x1 x2 + x3^2: single strange point (0,0,1)
    MultiPoly conic(T, 1, 3);
    conic.set_coeff(Mono{1, 1, 0}, T.one());
    conic.set_coeff(Mono{0, 0, 2}, T.one());
    auto s2 = strange_points(PlaneCurve::make(conic), 2, 0);
    CHECK(s2.finite);
    CHECK(s2.length == 1);
    REQUIRE(s2.points.size() == 1);
    CHECK(s2.points[0].point == ProjPoint::normalize({T.zero(), T.zero(), T.one()}));

    // seeded general quartics: length 7
    int pass4 = 0;
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        auto s4 = strange_points(seeded_general_quartic(T, seed), 2, seed);
        if (s4.finite && s4.split_certificate) {
            CHECK(s4.length == 7);
            ++pass4;
        }
    }
    CHECK(pass4 > 0);

    // seeded general sextics: length 21
    Prng rng(99);
    int pass6 = 0;
    for (int it = 0; it < 6 && pass6 == 0; ++it) {
        MultiPoly q(T, 1, 3);
        for (auto& m : monomials_of_degree(3, 3))
            q.set_coeff(m, T.from_bits(rng.below(8), 1));
        if (q.is_zero()) continue;
        PlaneCurve B = PlaneCurve::make(klein_form(T, 3).B + q * q);
        auto s6 = strange_points(B, 1, 7 + it);
        if (s6.finite && s6.split_certificate) {
            CHECK(s6.length == 21);
            ++pass6;
        }
    }
    CHECK(pass6 > 0);
}

TEST_CASE("decompose_square splits and preserves gradients") {
    const FieldTower& T = FieldTower::make(3);
    // x1^4 -> q = x1^2, B' = 0
    MultiPoly f(T, 1, 3);
    f.set_coeff(Mono{4, 0, 0}, T.one());
    auto [q1, r1] = decompose_square(PlaneCurve::make(f));
    MultiPoly x1sq(T, 1, 3);
    x1sq.set_coeff(Mono{2, 0, 0}, T.one());
    CHECK(q1 == x1sq);
    CHECK(r1.is_zero());
    // x1^3 x2 -> q = 0
    MultiPoly g(T, 1, 3);
    g.set_coeff(Mono{3, 1, 0}, T.one());
    auto [q2, r2] = decompose_square(PlaneCurve::make(g));
    CHECK(q2.is_zero());
    CHECK(r2 == g);
    // x1^2 x2^2 -> q = x1 x2
    MultiPoly h(T, 1, 3);
    h.set_coeff(Mono{2, 2, 0}, T.one());
    auto [q3, r3] = decompose_square(PlaneCurve::make(h));
    MultiPoly x1x2(T, 1, 3);
    x1x2.set_coeff(Mono{1, 1, 0}, T.one());
    CHECK(q3 == x1x2);
    CHECK(r3.is_zero());
    // random: B = q^2 + B' and grad B = grad B'
    Prng rng(5);
    for (int it = 0; it < 20; ++it) {
        MultiPoly B(T, 1, 3);
        for (auto& m : monomials_of_degree(3, 4)) B.set_coeff(m, T.from_bits(rng.below(8), 1));
        if (B.is_zero() || B.homogeneous_degree() != 4) continue;
        auto [q, Bp] = decompose_square(PlaneCurve::make(B));
        CHECK(q * q + Bp == B);
        for (int i = 0; i < 3; ++i) CHECK(B.partial(i) == Bp.partial(i));
    }
}

TEST_CASE("family_a3: 7 A3 singularities, also with a square added") {
    const FieldTower& T = FieldTower::make(3);
    FindOptions opt;
    opt.max_ext_degree = 2;
    opt.seed = 21;
    PlaneCurve B = klein_form(T, 2);
    auto v = verify_a3(family_a3(B), B, opt);
    CHECK(v.ok);
    CHECK(v.locus.geometric_count() == 7);
    // adding q^2 leaves the gradient, hence the verification, unchanged
    PlaneCurve B2 = seeded_general_quartic(T, 77);
    auto v2 = verify_a3(family_a3(B2), B2, opt);
    CHECK(v2.ok);
    CHECK(v2.locus.geometric_count() == 7);
}

TEST_CASE("family_a3 rejects a non-reduced critical locus") {
    const FieldTower& T = FieldTower::make(3);
    // B = x1^3 x2 + x2^3 x1: gradient (x1^2 x2 + x2^3, x1^3 + x2^2 x1, 0):
    // critical points include a non-reduced scheme
    MultiPoly B(T, 1, 3);
    B.set_coeff(Mono{3, 1, 0}, T.one());
    B.set_coeff(Mono{1, 3, 0}, T.one());
    B.set_coeff(Mono{0, 1, 3}, T.one());
    PlaneCurve pc = PlaneCurve::make(B);
    auto sigma = strange_points(pc, 3, 1);
    if (sigma.finite) {
        bool nonreduced = false;
        for (auto& sp : sigma.points) nonreduced |= sp.multiplicity > 1;
        if (nonreduced) {
            FindOptions opt;
            opt.max_ext_degree = 3;
            auto v = verify_a3(family_a3(pc), pc, opt);
            CHECK(!v.ok);
            CHECK(!v.diagnostics.empty());
        }
    }
}

TEST_CASE("family_special: 14 nodes, defect sum 28, planar dual") {
    const FieldTower& T = FieldTower::make(3);
    FindOptions opt;
    opt.max_ext_degree = 2;
    opt.seed = 4;
    PlaneCurve B = klein_form(T, 2);
    QuarticSurface X = family_special(B);
    auto v = verify_special(X, B, opt);
    CHECK(v.ok);
    CHECK(v.locus.geometric_count() == 14);
    CHECK(v.locus.defect_sum() == 28);
    auto led = degree_ledger(v.locus);
    CHECK(led.product == 8);
    // vertical pairs: the two z-values over each strange point differ
    // exactly when x1 != 0 there (guaranteed by the hypotheses)
    auto pts = geometric_points(v.locus);
    std::map<std::vector<std::uint64_t>, int> fibers;
    for (auto& p : pts) {
        std::vector<FieldElem> xpart{p.x[0], p.x[1], p.x[2]};
        auto plane = ProjPoint::normalize(std::move(xpart)).reduced();
        std::vector<std::uint64_t> key{static_cast<std::uint64_t>(plane.level())};
        for (auto& c : plane.x) key.push_back(c.bits());
        fibers[key]++;
    }
    CHECK(fibers.size() == 7);
    for (auto& [k, cnt] : fibers) CHECK(cnt == 2);
}

TEST_CASE("family_special verifier fails when x1 = 0 meets the strange points") {
    const FieldTower& T = FieldTower::make(3);
    // swap the roles of the variables so that a strange point lands on x1 = 0:
    // B with critical point at (0, 0, 1) is x1 x2 + x3^2... use the conic trick:
    // B = (x1 x2 + x3^2)^2 has zero gradient; instead take Klein in permuted
    // variables so that one strange point has first coordinate zero.
    // Klein's strange points are (eps, 1, eps^3), never zero in any entry, so
    // build B = x2^3 x1 + x1^3 x3 + x3^3 x2 and check it still works, then
    // force a failure with a curve whose critical locus contains (0,1,0).
    MultiPoly B(T, 1, 3);
    B.set_coeff(Mono{0, 3, 1}, T.one());   // x2^3 x3
    B.set_coeff(Mono{1, 0, 3}, T.one());   // x3^3 x1
    B.set_coeff(Mono{4, 0, 0}, T.one());   // x1^4 (zero gradient part)
    // gradient: (x3^3, x2^2 x3, x2^3 + x3^2 x1): vanishes at (1,0,0)? B1=0,
    // B2=0, B3=0 at x2=x3=0: yes -> strange point (1,0,0) off the line x1=0.
    // vanishes at (0,1,0)? B1 = 0, B2 = 0, B3 = 1 != 0: no. Use x-swap:
    MultiPoly Bs(T, 1, 3);
    for (auto& [m, c] : B.terms()) Bs.set_coeff(Mono{m[1], m[0], m[2]}, T.from_bits(c, 1));
    // now (0,1,0) is critical for Bs and lies on x1 = 0
    PlaneCurve pc = PlaneCurve::make(Bs);
    auto sigma = strange_points(pc, 2, 3);
    bool on_line = false;
    for (auto& sp : sigma.points) on_line |= sp.point.x[0].is_zero();
    REQUIRE(on_line);
    FindOptions opt;
    opt.max_ext_degree = 2;
    auto v = verify_special(family_special(pc), pc, opt);
    CHECK(!v.ok);
    CHECK(!v.diagnostics.empty());
}

TEST_CASE("family_insep: lengths (8, 4, 17, 13) and 14 nodes for seeded B") {
    const FieldTower& T = FieldTower::make(3);
    PlaneCurve B = seeded_general_quartic(T, 1);
    QuarticSurface X = family_insep(B);
    FindOptions opt;
    opt.max_ext_degree = 13;
    opt.seed = 1;
    auto rep = verify_insep(X, B, opt);
    CHECK(rep.ok);
    CHECK(rep.len_base == 8);
    CHECK(rep.len_line == 4);
    CHECK(rep.len_hb == 17);
    CHECK(rep.len_s == 13);
    CHECK(rep.disjoint);
    CHECK(rep.node_at_center);
    CHECK(rep.len_hb == rep.len_s + rep.len_line);
    CHECK(rep.locus.geometric_count() == 14);
    for (auto& r : rep.locus.points) CHECK(r.kind == SingKind::Node);
    auto led = degree_ledger(rep.locus);
    CHECK(led.product == 8);  // 2 (25 - 8 - 13)
}

TEST_CASE("family_dual_plane: 14 nodes for the special instance, excess 4") {
    const FieldTower& T = FieldTower::make(3);
    PlaneCurve B = seeded_general_quartic(T, 7);
    FieldElem lambda = T.zero();
    QuarticSurface X = family_dual_plane(lambda, B);
    FindOptions opt;
    opt.max_ext_degree = 13;
    opt.seed = 7;
    auto v = verify_dual_plane(X, B, opt);
    CHECK(v.ok);
    CHECK(v.locus.geometric_count() == 14);
    for (auto& r : v.locus.points) CHECK(r.kind == SingKind::Node);
    CHECK(dual_plane_excess(lambda, B) == 4);
    CHECK(18 - dual_plane_excess(lambda, B) == v.locus.geometric_count());
}

TEST_CASE("family_dual_plane with lambda = 1 stays within the main theorem") {
    const FieldTower& T = FieldTower::make(3);
    PlaneCurve B = seeded_general_quartic(T, 15);
    FieldElem lambda = T.one();
    QuarticSurface X = family_dual_plane(lambda, B);
    FindOptions opt;
    opt.max_ext_degree = 13;
    opt.seed = 15;
    auto v = verify_dual_plane(X, B, opt);
    CHECK(v.locus.complete);
    CHECK(v.locus.geometric_count() <= 14);
    if (v.locus.geometric_count() == 14)
        for (auto& r : v.locus.points) CHECK(r.kind == SingKind::Node);
}
