// Bit-packed polynomials over GF(2), used for defining polynomials of the
// field tower and for the carry-less arithmetic backing every extension level.
#pragma once

#include <cstdint>
#include <vector>

namespace qc2 {

// A polynomial over GF(2): bit i of word i/64 is the coefficient of x^i.
struct Gf2x {
    std::vector<std::uint64_t> w;

    Gf2x() = default;
    explicit Gf2x(std::uint64_t bits) : w{bits} { trim(); }

    static Gf2x zero() { return Gf2x{}; }
    static Gf2x monomial(int k);

    bool is_zero() const { return w.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool get(int i) const;
    void set(int i, bool v);
    void trim();

    friend bool operator==(const Gf2x& a, const Gf2x& b) { return a.w == b.w; }
};

Gf2x gf2x_add(const Gf2x& a, const Gf2x& b);
Gf2x gf2x_mul(const Gf2x& a, const Gf2x& b);
Gf2x gf2x_shift(const Gf2x& a, int k);
// Remainder of a modulo b (b != 0).
Gf2x gf2x_mod(const Gf2x& a, const Gf2x& b);
Gf2x gf2x_gcd(Gf2x a, Gf2x b);
// x^(2^e) mod f, by repeated squaring.
Gf2x gf2x_pow2k_x(int e, const Gf2x& f);

bool gf2x_irreducible(const Gf2x& f);

// The lexicographically smallest irreducible of degree n over GF(2), where
// candidates are ordered by the integer value of their low-coefficient bits.
// Deterministic; this is the canon used by every FieldTower.
Gf2x smallest_irreducible(int n);

}  // namespace qc2
