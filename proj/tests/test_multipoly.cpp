#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc2/multipoly.hpp"
#include "qc2/prng.hpp"

using namespace qc2;

namespace {

MultiPoly random_form(const FieldTower& T, int level, int nvars, int deg, Prng& rng) {
    MultiPoly p(T, level, nvars);
    // dense random homogeneous form
    std::vector<Mono> monos;
    Mono cur(nvars, 0);
    // simple recursive enumeration
    struct Rec {
        int nvars, deg;
        std::vector<Mono>& out;
        void go(Mono& m, int pos, int left) {
            if (pos == nvars - 1) {
                m[pos] = static_cast<std::uint8_t>(left);
                out.push_back(m);
                return;
            }
            for (int e = left; e >= 0; --e) {
                m[pos] = static_cast<std::uint8_t>(e);
                go(m, pos + 1, left - e);
            }
        }
    } rec{nvars, deg, monos};
    rec.go(cur, 0, deg);
    for (auto& m : monos) p.set_coeff(m, T.from_bits(rng.below(T.order(level)), level));
    return p;
}

}  // namespace

TEST_CASE("partial derivatives in characteristic 2") {
    const FieldTower& T = FieldTower::make(1);
    // d/dx (x^2 y) = 0
    MultiPoly p(T, 1, 2);
    p.set_coeff(Mono{2, 1}, T.one());
    CHECK(p.partial(0).is_zero());
    // d/dx (x^3) = x^2
    MultiPoly q(T, 1, 1);
    q.set_coeff(Mono{3}, T.one());
    MultiPoly x2(T, 1, 1);
    x2.set_coeff(Mono{2}, T.one());
    CHECK(q.partial(0) == x2);
    // d/dx1 (x1^3 x2 + x2^3 x3 + x3^3 x1) = x1^2 x2 + x3^3
    MultiPoly k(T, 1, 3);
    k.set_coeff(Mono{3, 1, 0}, T.one());
    k.set_coeff(Mono{0, 3, 1}, T.one());
    k.set_coeff(Mono{1, 0, 3}, T.one());
    MultiPoly expect(T, 1, 3);
    expect.set_coeff(Mono{2, 1, 0}, T.one());
    expect.set_coeff(Mono{0, 0, 3}, T.one());
    CHECK(k.partial(0) == expect);
}

TEST_CASE("euler_check holds for even-degree homogeneous forms") {
    const FieldTower& T4 = FieldTower::make(4);
    // x0^4
    MultiPoly p(T4, 1, 4);
    p.set_coeff(Mono{4, 0, 0, 0}, T4.one());
    CHECK(euler_check(p));
    // x0 x1 x2 x3
    MultiPoly q(T4, 1, 4);
    q.set_coeff(Mono{1, 1, 1, 1}, T4.one());
    CHECK(euler_check(q));
    // Klein-type quartic in 4 variables (expand symbolically)
    MultiPoly k(T4, 1, 4);
    k.set_coeff(Mono{3, 1, 0, 0}, T4.one());
    k.set_coeff(Mono{0, 3, 1, 0}, T4.one());
    k.set_coeff(Mono{0, 0, 3, 1}, T4.one());
    k.set_coeff(Mono{1, 0, 0, 3}, T4.one());
    CHECK(euler_check(k));
    // 1000 random homogeneous quartics over GF(16)
    Prng rng(2024);
    for (int it = 0; it < 1000; ++it) {
        MultiPoly f = random_form(T4, 1, 4, 4, rng);
        if (f.is_zero()) continue;
        CHECK(euler_check(f));
    }
}

TEST_CASE("substitution, evaluation and linear change agree") {
    const FieldTower& T = FieldTower::make(3);
    Prng rng(5);
    MultiPoly f = random_form(T, 1, 3, 4, rng);
    std::vector<std::vector<FieldElem>> M(3, std::vector<FieldElem>(3, T.zero()));
    for (auto& row : M)
        for (auto& e : row) e = T.from_bits(rng.below(8), 1);
    MultiPoly g = f.linear_change(M);
    for (int it = 0; it < 30; ++it) {
        std::vector<FieldElem> x{T.from_bits(rng.below(8), 1), T.from_bits(rng.below(8), 1),
                                 T.from_bits(rng.below(8), 1)};
        std::vector<FieldElem> Mx(3, T.zero());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) Mx[i] = Mx[i] + M[i][j] * x[j];
        CHECK(g.eval(x) == f.eval(Mx));
    }
}

TEST_CASE("perfect squares and square roots") {
    const FieldTower& T = FieldTower::make(2);
    Prng rng(9);
    MultiPoly q = random_form(T, 1, 3, 2, rng);
    MultiPoly q2 = q * q;
    CHECK(q2.is_perfect_square());
    CHECK(q2.square_root() == q);
    MultiPoly odd(T, 1, 3);
    odd.set_coeff(Mono{3, 1, 0}, T.one());
    CHECK(!odd.is_perfect_square());
}

TEST_CASE("translate_var shifts the origin") {
    const FieldTower& T = FieldTower::make(3);
    Prng rng(11);
    MultiPoly f = random_form(T, 1, 3, 3, rng);
    FieldElem a = T.gen(1);
    MultiPoly g = f.translate_var(1, a);
    for (int it = 0; it < 20; ++it) {
        std::vector<FieldElem> x{T.from_bits(rng.below(8), 1), T.from_bits(rng.below(8), 1),
                                 T.from_bits(rng.below(8), 1)};
        std::vector<FieldElem> xs = x;
        xs[1] = xs[1] + a;
        CHECK(g.eval(x) == f.eval(xs));
    }
}

TEST_CASE("homogeneous degree tracking and graded parts") {
    const FieldTower& T = FieldTower::make(2);
    MultiPoly f(T, 1, 2);
    f.set_coeff(Mono{2, 0}, T.one());
    f.set_coeff(Mono{0, 1}, T.one());
    CHECK(!f.homogeneous_degree());
    CHECK(f.graded_part(2).homogeneous_degree() == 2);
    CHECK(f.graded_part(1).homogeneous_degree() == 1);
    CHECK(f.graded_part(3).is_zero());
}
