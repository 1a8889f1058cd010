// Univariate polynomials over one level of a field tower: Euclidean
// arithmetic, squarefree decomposition (characteristic-2 aware), distinct
// degree splitting, root finding in tower extensions, and factorization into
// irreducibles. Root enumeration is deterministic.
#pragma once

#include <cstdint>
#include <vector>

#include "qc2/field.hpp"

namespace qc2 {

class UniPoly {
public:
    UniPoly() : tower_(&FieldTower::make(1)), level_(1) {}
    UniPoly(const FieldTower& t, int level) : tower_(&t), level_(level) {}
    UniPoly(const FieldTower& t, int level, std::vector<std::uint64_t> coeffs)
        : tower_(&t), level_(level), c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(const FieldTower& t, int level) { return UniPoly(t, level); }
    static UniPoly constant(const FieldElem& a);
    static UniPoly monomial(const FieldTower& t, int level, int k, std::uint64_t coeff = 1);
    // Convenience: t as the variable.
    static UniPoly var(const FieldTower& t, int level) { return monomial(t, level, 1); }

    const FieldTower& tower() const { return *tower_; }
    int level() const { return level_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    FieldElem coeff(int i) const;
    std::uint64_t coeff_bits(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    void set_coeff(int i, const FieldElem& a);
    const std::vector<std::uint64_t>& raw() const { return c_; }

    // Valuation at t = 0 (lowest nonzero degree); degree()+1... INT_MAX for 0.
    int valuation() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    bool operator==(const UniPoly& o) const;

    UniPoly scale(const FieldElem& a) const;
    UniPoly shift_up(int k) const;  // multiply by t^k
    // Exact division by t^k; throws if not divisible.
    UniPoly shift_down(int k) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    // Quotient and remainder; divisor nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

    FieldElem eval(const FieldElem& x) const;
    // p(t + a): Taylor shift.
    UniPoly translate(const FieldElem& a) const;
    // t^d * p(1/t) for d >= degree().
    UniPoly reverse(int d) const;
    // Coefficients lifted into a higher tower level.
    UniPoly lift(int target_level) const;
    // p(c*t)
    UniPoly scale_var(const FieldElem& c) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const FieldTower* tower_;
    int level_;
    std::vector<std::uint64_t> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd
// Resultant of two polynomials over the field (Euclidean; characteristic 2,
// so no sign bookkeeping).
FieldElem resultant(const UniPoly& a, const UniPoly& b);

// Squarefree decomposition: pairwise coprime squarefree factors with their
// multiplicities, product = monic(p).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Factorization into monic irreducibles over the coefficient level.
std::vector<std::pair<UniPoly, int>> factorize(const UniPoly& p);

struct UniRoot {
    FieldElem root;   // normalized to its minimal tower level
    int multiplicity; // as a root of p
    int ext_degree;   // = root.level() after normalization
};

// All roots of p (nonzero) in tower levels <= max_ext_degree, each Galois
// conjugate listed separately, ordered deterministically.
std::vector<UniRoot> uni_roots(const UniPoly& p, int max_ext_degree);

}  // namespace qc2
