// Arithmetic in towers GF(2^m) <= GF(2^{2m}) <= GF(2^{3m}) <= ... of binary
// fields. Level d of the tower is GF(2)[x]/(p_{m d}) where p_n is the
// lexicographically smallest irreducible of degree n over GF(2), so the
// defining data is reproducible from scratch on any machine.
//
// Embeddings between levels d' | d are chosen canonically: when a level is
// materialized, edges from all its divisors are fixed in increasing divisor
// order, each time taking the smallest root (by bit pattern) of the divisor's
// defining polynomial that is compatible with the edges already fixed. The
// resulting lattice of embeddings commutes, and is independent of the order
// in which callers touch levels.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qc2/gf2x.hpp"

namespace qc2 {

class FieldTower;

// An element of some level of a tower. Value type; all operations are pure.
// Operands at different levels are lifted to the lcm level first.
class FieldElem {
public:
    FieldElem();  // zero of GF(2)

    const FieldTower& tower() const { return *tower_; }
    int level() const { return level_; }
    std::uint64_t bits() const { return bits_; }

    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inv() const;  // throws on zero
    FieldElem square() const;
    // The unique square root (Frobenius is bijective).
    FieldElem sqrt() const;
    FieldElem pow(std::uint64_t e) const;
    // x -> x^(2^m): generator of Gal(level d / level 1).
    FieldElem frobenius_base() const;

    // Lift into a higher level (level() must divide target).
    FieldElem lift(int target_level) const;
    // Express at a lower level if possible (target must divide level()).
    std::optional<FieldElem> descend(int target_level) const;
    // Smallest tower level containing this element.
    int min_level() const;
    // The element re-expressed at min_level().
    FieldElem normalized() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string to_hex() const;

private:
    friend class FieldTower;
    FieldElem(const FieldTower* t, int level, std::uint64_t bits)
        : tower_(t), level_(level), bits_(bits) {}

    const FieldTower* tower_;
    int level_;
    std::uint64_t bits_;
};

// One tower per base exponent m, created by FieldTower::make. Towers are
// immortal singletons, so FieldElem can hold a plain pointer.
class FieldTower {
public:
    // 1 <= m <= 32; throws std::invalid_argument otherwise.
    static const FieldTower& make(int m);

    int m() const { return m_; }
    // Levels are capped so that m*level fits one machine word.
    int max_level() const { return 63 / m_; }
    // q = 2^(m*level), as long as it fits.
    std::uint64_t order(int level) const;

    Gf2x defining_poly(int level) const;

    FieldElem zero(int level = 1) const;
    FieldElem one(int level = 1) const;
    FieldElem gen(int level) const;  // class of x at that level
    FieldElem from_bits(std::uint64_t bits, int level) const;
    FieldElem from_hex(const std::string& hex, int level) const;

    bool operator==(const FieldTower& o) const { return this == &o; }

    // Internal arithmetic entry points (used by FieldElem and by the flat
    // matrix kernels that store elements as raw codes).
    std::uint64_t add_raw(int level, std::uint64_t a, std::uint64_t b) const { (void)level; return a ^ b; }
    std::uint64_t mul_raw(int level, std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv_raw(int level, std::uint64_t a) const;
    std::uint64_t sqrt_raw(int level, std::uint64_t a) const;
    std::uint64_t lift_raw(int from_level, int to_level, std::uint64_t a) const;
    std::optional<std::uint64_t> descend_raw(int from_level, int to_level, std::uint64_t a) const;

private:
    explicit FieldTower(int m);
    struct Level;
    const Level& level(int d) const;
    const Level& level_unlocked(int d) const;

    int m_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qc2
