#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc2/linalg.hpp"
#include "qc2/prng.hpp"

using namespace qc2;

namespace {

MultiPoly form_from(const FieldTower& T, int nvars, std::initializer_list<std::pair<Mono, int>> tt) {
    MultiPoly p(T, 1, nvars);
    for (auto& [m, c] : tt) p.set_coeff(m, T.from_bits(c, 1));
    return p;
}

MultiPoly random_homog(const FieldTower& T, int nvars, int deg, Prng& rng) {
    MultiPoly p(T, 1, nvars);
    for (auto& m : monomials_of_degree(nvars, deg))
        p.set_coeff(m, T.from_bits(rng.below(T.order(1)), 1));
    return p;
}

}  // namespace

TEST_CASE("graded_hilbert on the book examples") {
    const FieldTower& T = FieldTower::make(1);
    // I = (x0, x1, x2) in P^2, d=1 -> 0
    IdealPresentation I;
    I.chart = Chart::Homogeneous;
    I.generators = {form_from(T, 3, {{Mono{1, 0, 0}, 1}}), form_from(T, 3, {{Mono{0, 1, 0}, 1}}),
                    form_from(T, 3, {{Mono{0, 0, 1}, 1}})};
    CHECK(graded_hilbert(I, 1) == 0);
    // I = (0) in P^2, d=2 -> 6
    IdealPresentation Z;
    Z.chart = Chart::Homogeneous;
    Z.generators = {MultiPoly::zero(T, 1, 3)};
    CHECK(graded_hilbert(Z, 2) == 6);
    // I = (x0^2) in P^2, d=2 -> 5
    IdealPresentation S;
    S.chart = Chart::Homogeneous;
    S.generators = {form_from(T, 3, {{Mono{2, 0, 0}, 1}})};
    CHECK(graded_hilbert(S, 2) == 5);
}

TEST_CASE("scheme_length of simple point schemes") {
    const FieldTower& T = FieldTower::make(1);
    // (x1, x2) in P^2 -> one reduced point
    IdealPresentation I;
    I.chart = Chart::Homogeneous;
    I.generators = {form_from(T, 3, {{Mono{0, 1, 0}, 1}}), form_from(T, 3, {{Mono{0, 0, 1}, 1}})};
    auto r = scheme_length(I);
    REQUIRE(r.finite);
    CHECK(r.length == 1);
    // (x1^2, x2) -> 2
    IdealPresentation J;
    J.chart = Chart::Homogeneous;
    J.generators = {form_from(T, 3, {{Mono{0, 2, 0}, 1}}), form_from(T, 3, {{Mono{0, 0, 1}, 1}})};
    auto r2 = scheme_length(J);
    REQUIRE(r2.finite);
    CHECK(r2.length == 2);
}

TEST_CASE("scheme_length of complete intersections matches Bezout") {
    const FieldTower& T = FieldTower::make(3);
    Prng rng(4242);
    int done = 0;
    for (int it = 0; it < 20 && done < 8; ++it) {
        IdealPresentation I;
        I.chart = Chart::Homogeneous;
        I.generators = {random_homog(T, 3, 3, rng), random_homog(T, 3, 3, rng)};
        SchemeLengthResult r;
        try {
            r = scheme_length(I);
        } catch (const CertificationError&) {
            continue;
        }
        if (!r.finite) continue;
        CHECK(r.length == 9);
        ++done;
        // randomized (d1,d2) pairs as well
        IdealPresentation J;
        J.chart = Chart::Homogeneous;
        int d1 = 1 + static_cast<int>(rng.below(3));
        int d2 = 1 + static_cast<int>(rng.below(3));
        J.generators = {random_homog(T, 3, d1, rng), random_homog(T, 3, d2, rng)};
        try {
            auto rj = scheme_length(J);
            if (rj.finite) CHECK(rj.length == d1 * d2);
        } catch (const CertificationError&) {
        }
    }
    CHECK(done > 0);
}

TEST_CASE("scheme_length flags positive-dimensional ideals") {
    const FieldTower& T = FieldTower::make(2);
    // a single cubic curve in P^2 is not zero-dimensional
    IdealPresentation I;
    I.chart = Chart::Homogeneous;
    I.generators = {form_from(T, 3, {{Mono{3, 0, 0}, 1}, {Mono{0, 3, 0}, 1}, {Mono{0, 1, 2}, 1}})};
    auto r = scheme_length(I, 14);
    CHECK(!r.finite);
    // early bail gives the same verdict
    auto rb = scheme_length(I, 24, 12);
    CHECK(!rb.finite);
}

TEST_CASE("local_colength on monomial ideals") {
    const FieldTower& T = FieldTower::make(1);
    auto var = [&](int i) {
        MultiPoly p(T, 1, 3);
        Mono m(3, 0);
        m[i] = 1;
        p.set_coeff(m, T.one());
        return p;
    };
    IdealPresentation I;
    I.chart = Chart::AffineOrigin;
    I.generators = {var(0), var(1), var(2)};
    auto r = local_colength(I);
    REQUIRE(r.finite);
    CHECK(r.value == 1);

    IdealPresentation J;
    J.chart = Chart::AffineOrigin;
    J.generators = {var(0), var(1), var(2) * var(2)};
    auto r2 = local_colength(J);
    REQUIRE(r2.finite);
    CHECK(r2.value == 2);

    IdealPresentation K;
    K.chart = Chart::AffineOrigin;
    K.generators = {var(0) * var(0), var(1) * var(1), var(2) * var(2)};
    auto r3 = local_colength(K);
    REQUIRE(r3.finite);
    CHECK(r3.value == 8);
}

TEST_CASE("local_colength is monotone until stabilization and detects curves") {
    const FieldTower& T = FieldTower::make(2);
    // (x, y): the z-axis passes through the origin -> infinite
    MultiPoly x(T, 1, 3), y(T, 1, 3);
    x.set_coeff(Mono{1, 0, 0}, T.one());
    y.set_coeff(Mono{0, 1, 0}, T.one());
    IdealPresentation I;
    I.chart = Chart::AffineOrigin;
    I.generators = {x, y};
    auto r = local_colength(I, 12);
    CHECK(!r.finite);
    auto rb = local_colength(I, 40, 10);
    CHECK(!rb.finite);
}

TEST_CASE("local_colength rejects non-vanishing generators") {
    const FieldTower& T = FieldTower::make(1);
    MultiPoly c = MultiPoly::constant(T, 1, 2, T.one());
    IdealPresentation I;
    I.chart = Chart::AffineOrigin;
    I.generators = {c};
    CHECK_THROWS_AS(local_colength(I), std::invalid_argument);
}

TEST_CASE("nullspace solves small systems") {
    const FieldTower& T = FieldTower::make(2);
    // rows over GF(4): [1 1 0], [0 1 1] -> kernel spanned by (1,1,1)
    std::vector<std::vector<std::uint64_t>> rows{{1, 1, 0}, {0, 1, 1}};
    auto ns = nullspace(T, 1, rows, 3);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<std::uint64_t>{1, 1, 1});
}
