// Projective points over a field tower and localization of polynomials at a
// point (dehomogenize in the chart of the first nonzero coordinate, then
// translate the point to the origin).
#pragma once

#include <stdexcept>
#include <vector>

#include "qc2/multipoly.hpp"

namespace qc2 {

// Positive-dimensional singular or critical locus: the variety fails the
// normality hypotheses of everything downstream.
struct NonNormalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A projective point with coordinates at one tower level, normalized so the
// first nonzero coordinate is 1.
struct ProjPoint {
    std::vector<FieldElem> x;

    static ProjPoint normalize(std::vector<FieldElem> coords);
    int level() const { return x.empty() ? 1 : x.front().level(); }
    int chart_index() const;  // smallest index with a nonzero entry
    ProjPoint reduced() const;  // coordinates at their smallest common level
    // Coordinate-wise x -> x^(2^m); generates the Galois orbit over level 1.
    ProjPoint frobenius() const;
    int orbit_size() const;
    // Smallest orbit member (by bit patterns): dedup key.
    ProjPoint orbit_canonical() const;
    bool operator==(const ProjPoint& o) const;
};

// Dehomogenize G in the chart of P and translate P to the origin.
MultiPoly localize_at(const MultiPoly& G, const ProjPoint& P);

}  // namespace qc2
