#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qc2/prng.hpp"
#include "qc2/unipoly.hpp"

using namespace qc2;

namespace {

UniPoly random_poly(const FieldTower& T, int level, int deg, Prng& rng) {
    UniPoly p(T, level);
    for (int i = 0; i <= deg; ++i) p.set_coeff(i, T.from_bits(rng.below(T.order(level)), level));
    return p;
}

}  // namespace

TEST_CASE("divmod is exact") {
    const FieldTower& T = FieldTower::make(3);
    Prng rng(1);
    for (int it = 0; it < 100; ++it) {
        UniPoly a = random_poly(T, 1, 9, rng);
        UniPoly b = random_poly(T, 1, 4, rng);
        if (b.is_zero()) continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("t^7 - 1 over GF(2) has 7 roots within level 3") {
    const FieldTower& T = FieldTower::make(1);
    UniPoly p = UniPoly::monomial(T, 1, 7) + UniPoly::constant(T.one());
    auto roots = uni_roots(p, 3);
    REQUIRE(roots.size() == 7);
    for (auto& r : roots) {
        CHECK(r.multiplicity == 1);
        CHECK(p.eval(r.root.lift(3)).is_zero());
    }
    CHECK(roots[0].ext_degree == 1);  // the root 1
    CHECK(roots[1].ext_degree == 3);
}

TEST_CASE("t^2 has the double root 0") {
    const FieldTower& T = FieldTower::make(2);
    UniPoly p = UniPoly::monomial(T, 1, 2);
    auto roots = uni_roots(p, 2);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].root.is_zero());
    CHECK(roots[0].multiplicity == 2);
}

TEST_CASE("t^2+t+1 over GF(2) has two roots in GF(4)") {
    const FieldTower& T = FieldTower::make(1);
    UniPoly p(T, 1, {1, 1, 1});
    auto roots = uni_roots(p, 2);
    REQUIRE(roots.size() == 2);
    for (auto& r : roots) {
        CHECK(r.ext_degree == 2);
        CHECK(r.root.pow(3).is_one());  // primitive cube roots of unity
    }
    CHECK(uni_roots(p, 1).empty());
}

TEST_CASE("roots found at extension levels re-verify by evaluation") {
    const FieldTower& T = FieldTower::make(2);
    Prng rng(7);
    for (int it = 0; it < 40; ++it) {
        UniPoly p = random_poly(T, 1, 6, rng);
        if (p.degree() < 1) continue;
        auto roots = uni_roots(p, 3);
        for (auto& r : roots) CHECK(p.eval(r.root).is_zero());
    }
}

TEST_CASE("squarefree decomposition reconstructs multiplicities") {
    const FieldTower& T = FieldTower::make(2);
    Prng rng(13);
    for (int it = 0; it < 30; ++it) {
        UniPoly a = random_poly(T, 1, 2, rng).monic();
        UniPoly b = random_poly(T, 1, 1, rng).monic();
        if (a.degree() < 1 || b.degree() < 1 || !gcd(a, b).is_one()) continue;
        UniPoly p = a * a * a * b * b;  // a^3 b^2
        auto sq = squarefree_decomposition(p);
        UniPoly prod = UniPoly::constant(T.one());
        for (auto& [f, m] : sq) {
            for (int i = 0; i < m; ++i) prod = prod * f;
        }
        CHECK(prod == p.monic());
    }
}

TEST_CASE("factorize returns irreducibles with correct product") {
    const FieldTower& T = FieldTower::make(3);
    Prng rng(29);
    for (int it = 0; it < 20; ++it) {
        UniPoly p = random_poly(T, 1, 8, rng);
        if (p.degree() < 1) continue;
        auto fac = factorize(p);
        UniPoly prod = UniPoly::constant(T.one());
        int degsum = 0;
        for (auto& [f, m] : fac) {
            for (int i = 0; i < m; ++i) prod = prod * f;
            degsum += f.degree() * m;
            CHECK(f.degree() >= 1);
        }
        CHECK(degsum == p.degree());
        CHECK(prod == p.monic());
    }
}

TEST_CASE("resultant vanishes exactly on common roots") {
    const FieldTower& T = FieldTower::make(2);
    Prng rng(31);
    for (int it = 0; it < 50; ++it) {
        UniPoly a = random_poly(T, 1, 4, rng);
        UniPoly b = random_poly(T, 1, 3, rng);
        if (a.degree() < 1 || b.degree() < 1) continue;
        bool common = gcd(a, b).degree() > 0;
        CHECK(resultant(a, b).is_zero() == common);
    }
}

TEST_CASE("translate and reverse behave as substitutions") {
    const FieldTower& T = FieldTower::make(3);
    Prng rng(41);
    UniPoly p = random_poly(T, 1, 5, rng);
    FieldElem a = T.gen(1);
    UniPoly q = p.translate(a);
    for (std::uint64_t b = 0; b < 8; ++b) {
        FieldElem x = T.from_bits(b, 1);
        CHECK(q.eval(x) == p.eval(x + a));
    }
    UniPoly r = p.reverse(5);
    for (std::uint64_t b = 1; b < 8; ++b) {
        FieldElem x = T.from_bits(b, 1);
        CHECK(r.eval(x) == p.eval(x.inv()) * x.pow(5));
    }
}
