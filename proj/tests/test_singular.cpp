#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc2/prng.hpp"
#include "qc2/singular.hpp"

using namespace qc2;

namespace {

// Variables ordered (x1, x2, x3, z).
MultiPoly quartic(const FieldTower& T, std::initializer_list<std::pair<Mono, std::uint64_t>> tt) {
    MultiPoly p(T, 1, 4);
    for (auto& [m, c] : tt) p.set_coeff(m, T.from_bits(c, 1));
    return p;
}

// Klein quartic form in the first three variables, as a 4-variable polynomial.
MultiPoly klein4(const FieldTower& T) {
    return quartic(T, {{Mono{3, 1, 0, 0}, 1}, {Mono{0, 3, 1, 0}, 1}, {Mono{1, 0, 3, 0}, 1}});
}

// Independent smoothness oracle: scan P^3 chart by chart over levels <= max_d.
bool brute_force_smooth(const QuarticSurface& X, int max_d) {
    const FieldTower& T = X.tower();
    std::vector<MultiPoly> sys{X.F};
    for (int i = 0; i < 4; ++i) sys.push_back(X.F.partial(i));
    for (int d = 1; d <= max_d; ++d) {
        std::uint64_t q = T.order(d);
        for (int c = 0; c < 4; ++c) {
            int nfree = 3 - c;
            std::vector<std::uint64_t> idx(nfree, 0);
            for (;;) {
                std::vector<FieldElem> pt;
                for (int i = 0; i < c; ++i) pt.push_back(T.zero(d));
                pt.push_back(T.one(d));
                for (auto b : idx) pt.push_back(T.from_bits(b, d));
                bool sing = true;
                for (auto& g : sys)
                    if (!g.eval(pt).is_zero()) {
                        sing = false;
                        break;
                    }
                if (sing) return false;
                if (nfree == 0) break;
                int i = 0;
                for (; i < nfree; ++i) {
                    if (++idx[i] < q) break;
                    idx[i] = 0;
                }
                if (i == nfree) break;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("a smooth quartic yields an empty, complete report") {
    const FieldTower& T = FieldTower::make(1);
    auto F = quartic(T, {{Mono{0, 0, 4, 0}, 1},
                         {Mono{0, 1, 0, 3}, 1},
                         {Mono{0, 3, 1, 0}, 1},
                         {Mono{1, 0, 2, 1}, 1},
                         {Mono{1, 1, 0, 2}, 1},
                         {Mono{1, 1, 2, 0}, 1},
                         {Mono{4, 0, 0, 0}, 1}});
    QuarticSurface X = QuarticSurface::make(F);
    CHECK(brute_force_smooth(X, 3));
    FindOptions opt;
    opt.max_ext_degree = 6;
    auto rep = find_singular_points(X, opt);
    CHECK(rep.points.empty());
    CHECK(rep.total_length == 0);
    CHECK(rep.complete);
}

TEST_CASE("classify_quadric_part over constructed local forms") {
    const FieldTower& T = FieldTower::make(3);
    ProjPoint P = ProjPoint::normalize({T.zero(), T.zero(), T.zero(), T.one()});
    // local equation q(x) + higher at (0,0,0,1), via F = z^2 q(x) + z g3 + g4
    auto node = QuarticSurface::make(
        quartic(T, {{Mono{1, 1, 0, 2}, 1}, {Mono{0, 0, 2, 2}, 1}, {Mono{4, 0, 0, 0}, 1}}));
    CHECK(classify_quadric_part(node, P) == SingKind::Node);
    auto bipl = QuarticSurface::make(quartic(T, {{Mono{1, 1, 0, 2}, 1}, {Mono{0, 0, 4, 0}, 1}}));
    CHECK(classify_quadric_part(bipl, P) == SingKind::Biplanar);
    auto unip = QuarticSurface::make(quartic(T, {{Mono{2, 0, 0, 2}, 1}, {Mono{0, 3, 1, 0}, 1}}));
    CHECK(classify_quadric_part(unip, P) == SingKind::Uniplanar);
    auto trip = QuarticSurface::make(quartic(T, {{Mono{3, 0, 0, 1}, 1}, {Mono{0, 4, 0, 0}, 1}}));
    CHECK(classify_quadric_part(trip, P) == SingKind::TripleOrWorse);
    // F = z^3 x1 is smooth at (0,0,0,1): rejected
    auto sm = QuarticSurface::make(quartic(T, {{Mono{1, 0, 0, 3}, 1}, {Mono{0, 4, 0, 0}, 1}}));
    CHECK_THROWS_AS(classify_quadric_part(sm, P), std::invalid_argument);
}

TEST_CASE("gaussian defects of standard local forms") {
    const FieldTower& T = FieldTower::make(3);
    ProjPoint P = ProjPoint::normalize({T.zero(), T.zero(), T.zero(), T.one()});
    // node: x1 x2 + x3^2 + tail -> defect 2
    auto node = QuarticSurface::make(
        quartic(T, {{Mono{1, 1, 0, 2}, 1}, {Mono{0, 0, 2, 2}, 1}, {Mono{4, 0, 0, 0}, 1}}));
    auto d2 = gaussian_defect(node, P, 3, 11);
    CHECK(!d2.infinite);
    CHECK(d2.value == 2);
    CHECK(d2.stable);
    // A2: x1 x2 + x3^3 -> defect 3
    auto a2 = QuarticSurface::make(
        quartic(T, {{Mono{1, 1, 0, 2}, 1}, {Mono{0, 0, 3, 1}, 1}, {Mono{4, 0, 0, 0}, 1}}));
    auto d3 = gaussian_defect(a2, P, 3, 11);
    CHECK(!d3.infinite);
    CHECK(d3.value == 3);
    // A3: x1 x2 + x3^4 -> defect 4
    auto a3 = QuarticSurface::make(quartic(T, {{Mono{1, 1, 0, 2}, 1}, {Mono{0, 0, 4, 0}, 1}}));
    auto d4 = gaussian_defect(a3, P, 3, 11);
    CHECK(!d4.infinite);
    CHECK(d4.value == 4);
    // D4 shape: x1^2 + x2^2 x3 + x2 x3^2 -> defect 8 here (bound: at least 8)
    auto dd4 = QuarticSurface::make(
        quartic(T, {{Mono{2, 0, 0, 2}, 1}, {Mono{0, 2, 1, 1}, 1}, {Mono{0, 1, 2, 1}, 1}}));
    auto d8 = gaussian_defect(dd4, P, 3, 11);
    CHECK(!d8.infinite);
    CHECK(d8.value >= 8);
    CHECK(d8.value == 8);
}

TEST_CASE("an_index follows defect - 1") {
    const FieldTower& T = FieldTower::make(3);
    ProjPoint P = ProjPoint::normalize({T.zero(), T.zero(), T.zero(), T.one()});
    auto a3 = QuarticSurface::make(quartic(T, {{Mono{1, 1, 0, 2}, 1}, {Mono{0, 0, 4, 0}, 1}}));
    SingularPointRecord rec;
    rec.point = P;
    rec.kind = classify_quadric_part(a3, P);
    rec.defect = gaussian_defect(a3, P, 3, 5);
    CHECK(rec.kind == SingKind::Biplanar);
    CHECK(an_index(rec) == 3);
    rec.kind = SingKind::Uniplanar;
    CHECK_THROWS_AS(an_index(rec), std::invalid_argument);
}

TEST_CASE("z^4 + Klein: seven A3 points, all data consistent") {
    const FieldTower& T = FieldTower::make(3);
    MultiPoly F = klein4(T);
    F.set_coeff(Mono{0, 0, 0, 4}, T.one());
    QuarticSurface X = QuarticSurface::make(F);
    FindOptions opt;
    opt.max_ext_degree = 2;
    opt.seed = 3;
    auto rep = find_singular_points(X, opt);
    CHECK(rep.complete);
    int geo = 0;
    for (auto& r : rep.points) {
        geo += r.ext_degree;
        CHECK(r.kind == SingKind::Biplanar);
        CHECK(!r.defect.infinite);
        CHECK(r.defect.value == 4);
        CHECK(r.an_index == 3);
        CHECK(r.rdp_status == RdpStatus::RDP);
        CHECK(r.defect.value >= r.local_length);
    }
    CHECK(geo == 7);
    CHECK(rep.nu == 7);
    CHECK(rep.b == 7);
    CHECK(rep.u == 0);
}

TEST_CASE("enumeration and resultant solvers agree on the A3 family") {
    const FieldTower& T = FieldTower::make(3);
    MultiPoly F = klein4(T);
    F.set_coeff(Mono{0, 0, 0, 4}, T.one());
    QuarticSurface X = QuarticSurface::make(F);
    FindOptions a, b;
    a.max_ext_degree = b.max_ext_degree = 2;
    a.seed = b.seed = 3;
    a.strategy = SolveStrategy::Enumerate;
    b.strategy = SolveStrategy::Resultants;
    auto ra = find_singular_points(X, a);
    auto rb = find_singular_points(X, b);
    CHECK(ra.complete);
    CHECK(rb.complete);
    REQUIRE(ra.points.size() == rb.points.size());
    for (size_t i = 0; i < ra.points.size(); ++i) {
        CHECK(ra.points[i].point == rb.points[i].point);
        CHECK(ra.points[i].local_length == rb.points[i].local_length);
    }
}

TEST_CASE("insep-shaped quartic has a node at x = 0") {
    const FieldTower& T = FieldTower::make(3);
    // z^2 (x1 x2 + x3^2) + (Klein + q^2), q = x1 x2 + x3^2
    MultiPoly F = klein4(T);
    MultiPoly q(T, 1, 3);
    q.set_coeff(Mono{1, 1, 0}, T.one());
    q.set_coeff(Mono{0, 0, 2}, T.one());
    MultiPoly q2 = q * q;
    for (auto& [m, c] : q2.terms())
        F.add_term(Mono{m[0], m[1], m[2], 0}, T.from_bits(c, 1));
    F.set_coeff(Mono{1, 1, 0, 2}, T.one());
    F.set_coeff(Mono{0, 0, 2, 2}, T.one());
    QuarticSurface X = QuarticSurface::make(F);
    ProjPoint origin = ProjPoint::normalize({T.zero(), T.zero(), T.zero(), T.one()});
    CHECK(classify_quadric_part(X, origin) == SingKind::Node);
    FindOptions opt;
    opt.max_ext_degree = 13;
    opt.seed = 9;
    auto rep = find_singular_points(X, opt);
    CHECK(rep.complete);
    bool found_origin = false;
    for (auto& r : rep.points) {
        if (r.point == origin) {
            found_origin = true;
            CHECK(r.kind == SingKind::Node);
            CHECK(r.defect.value == 2);
        }
        CHECK(r.defect.value >= r.local_length);
    }
    CHECK(found_origin);
    CHECK(rep.defect_sum() <= 36);
}

TEST_CASE("non-normal inputs are rejected") {
    const FieldTower& T = FieldTower::make(2);
    // perfect square (x1 x3 + x2 z)^2
    MultiPoly sq(T, 1, 4);
    sq.set_coeff(Mono{2, 0, 2, 0}, T.one());
    sq.set_coeff(Mono{0, 2, 0, 2}, T.one());
    CHECK_THROWS_AS(QuarticSurface::make(sq), NonNormalError);
    // x1^2 (x1 x2 + x3^2): the singular locus contains a curve
    MultiPoly bad(T, 1, 4);
    bad.set_coeff(Mono{3, 1, 0, 0}, T.one());
    bad.set_coeff(Mono{2, 0, 2, 0}, T.one());
    QuarticSurface X = QuarticSurface::make(bad);
    CHECK_THROWS_AS(find_singular_points(X, {}), NonNormalError);
}

TEST_CASE("Galois orbits are reported once with the right size") {
    const FieldTower& T = FieldTower::make(1);
    // z^4 + Klein over GF(2): seven strange points in orbits over GF(8)
    MultiPoly F = klein4(T);
    F.set_coeff(Mono{0, 0, 0, 4}, T.one());
    QuarticSurface X = QuarticSurface::make(F);
    FindOptions opt;
    opt.max_ext_degree = 6;
    opt.seed = 1;
    auto rep = find_singular_points(X, opt);
    CHECK(rep.complete);
    int geo = 0;
    for (auto& r : rep.points) geo += r.ext_degree;
    CHECK(geo == 7);
    CHECK(rep.points.size() == 3);  // orbit sizes 1 + 3 + 3
}
