#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc2/families.hpp"
#include "qc2/gauss.hpp"

using namespace qc2;

namespace {

ProjPoint pt(const FieldTower& T, std::initializer_list<std::uint64_t> bits, int level = 1) {
    std::vector<FieldElem> v;
    for (auto b : bits) v.push_back(T.from_bits(b, level));
    return ProjPoint::normalize(std::move(v));
}

}  // namespace

TEST_CASE("degree ledger on the A3 family: product 8") {
    const FieldTower& T = FieldTower::make(3);
    PlaneCurve B = klein_form(T, 2);
    QuarticSurface X = family_a3(B);
    FindOptions opt;
    opt.max_ext_degree = 2;
    auto rep = find_singular_points(X, opt);
    REQUIRE(rep.complete);
    auto led = degree_ledger(rep);
    CHECK(led.defect_sum == 28);  // 7 x A3, defect 4 each
    CHECK(led.product == 8);
    CHECK(led.nu == 7);
    CHECK(led.b == 7);
    CHECK(led.u == 0);
    CHECK(led.bound_ok);
    // dual plane: kernel dimension 1, so the Gauss degree is the product
    auto kernel = dual_plane_kernel(X);
    CHECK(kernel.size() == 1);
    auto g = gauss_degree_if_dual_plane(led, static_cast<int>(kernel.size()));
    REQUIRE(g.has_value());
    CHECK(*g == 8);
}

TEST_CASE("degree ledger of a smooth quartic: product 36") {
    const FieldTower& T = FieldTower::make(1);
    MultiPoly F(T, 1, 4);
    for (auto m : {Mono{0, 0, 4, 0}, Mono{0, 1, 0, 3}, Mono{0, 3, 1, 0}, Mono{1, 0, 2, 1},
                   Mono{1, 1, 0, 2}, Mono{1, 1, 2, 0}, Mono{4, 0, 0, 0}})
        F.set_coeff(m, T.one());
    auto rep = find_singular_points(QuarticSurface::make(F), {});
    REQUIRE(rep.complete);
    auto led = degree_ledger(rep);
    CHECK(led.defect_sum == 0);
    CHECK(led.product == 36);
    CHECK(gauss_degree_if_dual_plane(led, 0) == std::nullopt);
}

TEST_CASE("dual plane kernel detects z^4 + z^2 Q + B shapes") {
    const FieldTower& T = FieldTower::make(2);
    // F = z^4 + z^2 x1^2 + Klein: dF/dz = 0
    QuarticSurface X = family_special(klein_form(T, 2));
    auto k = dual_plane_kernel(X);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0].is_zero());
    CHECK(k[0][1].is_zero());
    CHECK(k[0][2].is_zero());
    CHECK(!k[0][3].is_zero());
    // partials w.r.t. two variables vanish: kernel dimension 2
    MultiPoly G(T, 1, 4);
    G.set_coeff(Mono{4, 0, 0, 0}, T.one());
    G.set_coeff(Mono{3, 1, 0, 0}, T.one());
    G.set_coeff(Mono{2, 2, 0, 0}, T.one());
    CHECK(dual_plane_kernel(QuarticSurface::make(G)).size() == 2);
    // generic quartic: trivial kernel
    MultiPoly H(T, 1, 4);
    for (auto m : {Mono{0, 0, 4, 0}, Mono{0, 1, 0, 3}, Mono{0, 3, 1, 0}, Mono{1, 0, 2, 1},
                   Mono{1, 1, 0, 2}, Mono{1, 1, 2, 0}, Mono{4, 0, 0, 0}})
        H.set_coeff(m, T.one());
    CHECK(dual_plane_kernel(QuarticSurface::make(H)).empty());
}

TEST_CASE("configuration_report incidence combinatorics") {
    const FieldTower& T = FieldTower::make(2);
    // three points in general position
    std::vector<ProjPoint> general{pt(T, {1, 0, 0, 0}), pt(T, {0, 1, 0, 0}), pt(T, {0, 0, 1, 0})};
    auto rep = configuration_report(general);
    CHECK(rep.max_collinear == 2);
    CHECK(rep.collinear_bound_ok);
    CHECK(rep.companion_pairs.size() == 3);
    CHECK(rep.has_point_with_two_companions);

    // four collinear points on the line x3 = z = 0
    std::vector<ProjPoint> collinear{pt(T, {1, 0, 0, 0}), pt(T, {0, 1, 0, 0}), pt(T, {1, 1, 0, 0}),
                                     pt(T, {1, 2, 0, 0})};
    auto rep2 = configuration_report(collinear);
    CHECK(rep2.max_collinear == 4);
    CHECK(!rep2.collinear_bound_ok);

    // duplicate points are rejected
    std::vector<ProjPoint> dup{pt(T, {1, 0, 0, 0}), pt(T, {1, 0, 0, 0})};
    CHECK_THROWS_AS(configuration_report(dup), std::invalid_argument);
}

TEST_CASE("configuration of the 14 nodes of the special family") {
    const FieldTower& T = FieldTower::make(3);
    QuarticSurface X = family_special(klein_form(T, 2));
    FindOptions opt;
    opt.max_ext_degree = 2;
    auto rep = find_singular_points(X, opt);
    REQUIRE(rep.complete);
    REQUIRE(rep.geometric_count() == 14);
    auto pts = geometric_points(rep);
    REQUIRE(pts.size() == 14);
    auto conf = configuration_report(pts);
    CHECK(conf.max_collinear <= 3);
    CHECK(conf.max_coplanar <= 6);
    CHECK(conf.collinear_bound_ok);
    CHECK(conf.coplanar_bound_ok);
    // nu = 14 >= 9: some point has two companions
    CHECK(conf.has_point_with_two_companions);
}
