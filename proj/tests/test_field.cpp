#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc2/field.hpp"
#include "qc2/prng.hpp"

using namespace qc2;

TEST_CASE("smallest irreducibles match the classical table") {
    CHECK(smallest_irreducible(1) == Gf2x::monomial(1));
    CHECK(smallest_irreducible(2) == Gf2x(0b111));          // x^2+x+1
    CHECK(smallest_irreducible(3) == Gf2x(0b1011));         // x^3+x+1
    CHECK(smallest_irreducible(4) == Gf2x(0b10011));        // x^4+x+1
    CHECK(smallest_irreducible(6) == Gf2x(0b1000011));      // x^6+x+1
    CHECK(smallest_irreducible(8) == Gf2x(0b100011011));    // x^8+x^4+x^3+x+1
    for (int n = 1; n <= 24; ++n) CHECK(gf2x_irreducible(smallest_irreducible(n)));
}

TEST_CASE("field_make validates m and is idempotent") {
    CHECK_THROWS(FieldTower::make(0));
    CHECK_THROWS(FieldTower::make(33));
    const FieldTower& a = FieldTower::make(3);
    const FieldTower& b = FieldTower::make(3);
    CHECK(&a == &b);
    CHECK(a.defining_poly(1) == smallest_irreducible(3));
    CHECK(a.defining_poly(2) == smallest_irreducible(6));
}

TEST_CASE("GF(4): omega^2 = omega + 1 under x^2+x+1") {
    const FieldTower& T = FieldTower::make(2);
    FieldElem w = T.gen(1);
    CHECK(w.square() == w + T.one());
    CHECK(w.pow(3).is_one());
}

TEST_CASE("GF(8) multiplicative group has order 7") {
    const FieldTower& T = FieldTower::make(3);
    FieldElem g = T.gen(1);
    CHECK(g.pow(7).is_one());
    for (int k = 1; k < 7; ++k) CHECK(!g.pow(k).is_one());
    // every nonzero element satisfies x^7 = 1
    for (std::uint64_t b = 1; b < 8; ++b) CHECK(T.from_bits(b, 1).pow(7).is_one());
}

TEST_CASE("inverses and sqrt across levels") {
    for (int m : {1, 2, 3, 4, 5}) {
        const FieldTower& T = FieldTower::make(m);
        Prng rng(17 + m);
        for (int d = 1; d <= 3; ++d) {
            std::uint64_t q = T.order(d);
            for (int it = 0; it < 200; ++it) {
                FieldElem a = T.from_bits(rng.below(q), d);
                if (!a.is_zero()) CHECK((a * a.inv()).is_one());
                CHECK(a.sqrt().square() == a);
                CHECK(a.square().sqrt() == a);
                FieldElem b = T.from_bits(rng.below(q), d);
                CHECK((a * b).sqrt() == a.sqrt() * b.sqrt());
            }
        }
    }
    // sqrt(0) = 0 and the GF(4) example sqrt(w) = w^2
    const FieldTower& T4 = FieldTower::make(2);
    CHECK(T4.zero().sqrt().is_zero());
    FieldElem w = T4.gen(1);
    CHECK(w.sqrt() == w.square());
}

TEST_CASE("embeddings are ring homomorphisms commuting with Frobenius") {
    const FieldTower& T = FieldTower::make(2);
    Prng rng(99);
    for (auto [d, e] : {std::pair{1, 2}, {1, 3}, {2, 4}, {1, 6}, {2, 6}, {3, 6}}) {
        std::uint64_t q = T.order(d);
        for (int it = 0; it < 100; ++it) {
            FieldElem a = T.from_bits(rng.below(q), d);
            FieldElem b = T.from_bits(rng.below(q), d);
            CHECK((a + b).lift(e) == a.lift(e) + b.lift(e));
            CHECK((a * b).lift(e) == a.lift(e) * b.lift(e));
            CHECK(a.square().lift(e) == a.lift(e).square());
        }
        CHECK(T.one(d).lift(e).is_one());
    }
}

TEST_CASE("embedding lattice commutes: 1->2->6 equals 1->6 etc") {
    for (int m : {1, 2, 3}) {
        const FieldTower& T = FieldTower::make(m);
        if (T.max_level() < 12) continue;
        Prng rng(7 * m);
        for (int it = 0; it < 50; ++it) {
            FieldElem a = T.from_bits(rng.below(T.order(2)), 2);
            CHECK(a.lift(6).lift(12) == a.lift(12));
            FieldElem b = T.from_bits(rng.below(T.order(3)), 3);
            CHECK(b.lift(6).lift(12) == b.lift(12));
            CHECK(b.lift(12).descend(3).has_value());
        }
    }
}

TEST_CASE("descend inverts lift and min_level is minimal") {
    const FieldTower& T = FieldTower::make(3);
    Prng rng(5);
    for (int it = 0; it < 100; ++it) {
        FieldElem a = T.from_bits(rng.below(T.order(2)), 2);
        FieldElem up = a.lift(4);
        auto back = up.descend(2);
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    FieldElem one = T.one(4);
    CHECK(one.min_level() == 1);
    // the level-2 generator does not live at level 1
    CHECK(T.gen(2).min_level() == 2);
}

TEST_CASE("cross-level arithmetic lands at the lcm level") {
    const FieldTower& T = FieldTower::make(2);
    FieldElem a = T.gen(2);
    FieldElem b = T.gen(3);
    FieldElem s = a + b;
    CHECK(s.level() == 6);
    CHECK(s + b.lift(6) == a.lift(6));
}
