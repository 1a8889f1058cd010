// Multivariate polynomials over a tower level, dense-map representation.
// These carry the quartic forms F, the plane quartics B, and the ideals fed
// to the Macaulay machinery. Exponent vectors are kept short (<= 8 vars).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qc2/field.hpp"
#include "qc2/unipoly.hpp"

namespace qc2 {

using Mono = std::vector<std::uint8_t>;  // exponent vector, size = num_vars

inline int mono_total(const Mono& m) {
    int s = 0;
    for (auto e : m) s += e;
    return s;
}

class MultiPoly {
public:
    MultiPoly() : tower_(&FieldTower::make(1)), level_(1), nvars_(0) {}
    MultiPoly(const FieldTower& t, int level, int nvars)
        : tower_(&t), level_(level), nvars_(nvars) {}

    static MultiPoly zero(const FieldTower& t, int level, int nvars) {
        return MultiPoly(t, level, nvars);
    }
    static MultiPoly constant(const FieldTower& t, int level, int nvars, const FieldElem& c);
    static MultiPoly variable(const FieldTower& t, int level, int nvars, int i);

    const FieldTower& tower() const { return *tower_; }
    int level() const { return level_; }
    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const std::map<Mono, std::uint64_t>& terms() const { return terms_; }

    // Max total degree; -1 for the zero polynomial.
    int total_degree() const;
    std::optional<int> homogeneous_degree() const;

    FieldElem coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const FieldElem& c);
    void add_term(const Mono& m, const FieldElem& c);  // +=

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    bool operator==(const MultiPoly& o) const;
    MultiPoly scale(const FieldElem& a) const;
    MultiPoly lift(int target_level) const;

    // Formal partial derivative; characteristic 2 kills even exponents.
    MultiPoly partial(int var) const;

    FieldElem eval(const std::vector<FieldElem>& x) const;
    // Substitute each variable by the given polynomial (all same nvars).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    // Linear change of coordinates: x_i -> sum_j M[i][j] x_j.
    MultiPoly linear_change(const std::vector<std::vector<FieldElem>>& M) const;
    // Set variable `var` to the constant c, dropping it from the ring.
    MultiPoly eval_var(int var, const FieldElem& c) const;
    // Keep the variable but substitute x_var -> x_var + c.
    MultiPoly translate_var(int var, const FieldElem& c) const;
    // The polynomial regarded as univariate in its single remaining variable.
    UniPoly as_univariate() const;

    // Every exponent even (equivalently F is a square in characteristic 2).
    bool is_perfect_square() const;
    MultiPoly square_root() const;  // requires is_perfect_square()

    // The part of the polynomial of total degree exactly d.
    MultiPoly graded_part(int d) const;

private:
    void trim(const Mono& m) {
        auto it = terms_.find(m);
        if (it != terms_.end() && it->second == 0) terms_.erase(it);
    }
    const FieldTower* tower_;
    int level_;
    int nvars_;
    std::map<Mono, std::uint64_t> terms_;
};

enum class Chart { Homogeneous, AffineOrigin };

// A list of generators sharing one ring and chart.
struct IdealPresentation {
    std::vector<MultiPoly> generators;
    Chart chart = Chart::Homogeneous;

    int num_vars() const { return generators.empty() ? 0 : generators.front().num_vars(); }
    void validate() const;  // same nvars everywhere; homogeneous if chart says so
};

// Whether sum_i x_i dF/dx_i is identically zero; the Euler identity makes
// this hold for every homogeneous F of even degree in characteristic 2.
bool euler_check(const MultiPoly& F);

}  // namespace qc2
