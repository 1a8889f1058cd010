// Macaulay-matrix engines: graded Hilbert function, zero-dimensional scheme
// length via Hilbert stabilization, and local Artinian colength at the
// origin. Exact row reduction over a tower level, no pivot scaling beyond
// inversion.
#pragma once

#include <stdexcept>
#include <vector>

#include "qc2/multipoly.hpp"

namespace qc2 {

// Raised when a stabilization bound is reached without a certificate either
// way (distinct from a definite "not zero-dimensional" answer).
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monomials of total degree d in nvars variables, graded reverse
// lexicographic, deterministic.
std::vector<Mono> monomials_of_degree(int nvars, int d);

// dim_K (S/I)_d for a homogeneous ideal, by row reduction of the
// multiplication-by-generators matrix into degree d.
int graded_hilbert(const IdealPresentation& I, int d);

struct SchemeLengthResult {
    bool finite = false;
    int length = 0;  // meaningful when finite
};

// Stabilized value of the Hilbert function (three consecutive equal values
// required). Returns finite=false when the function is still strictly
// increasing at d_max; throws CertificationError when d_max is hit in an
// ambiguous state. bail_bound, when positive, turns "h_d >= bail_bound"
// into an early not-zero-dimensional verdict (callers use it when an a
// priori mass bound is known).
SchemeLengthResult scheme_length(const IdealPresentation& I, int d_max = 24, int bail_bound = -1);

struct ColengthResult {
    bool finite = false;
    int value = 0;
};

// c_N = dim K[x]/(I + m^N) for N = 2,3,...; returns c_N once c_{N+1} = c_N
// (then m^N lies in I by the complete local ring argument). Infinite when no
// stabilization occurs by N = cap or when c_N exceeds bail_bound (> 0).
ColengthResult local_colength(const IdealPresentation& I, int cap = 40, int bail_bound = -1);

// Rank of a dense matrix over one tower level; rows are coefficient vectors,
// destroyed in place. Deterministic.
int gauss_rank(const FieldTower& T, int level, std::vector<std::vector<std::uint64_t>>& rows);

// Nullspace basis of the matrix (rows x cols), over the level.
std::vector<std::vector<std::uint64_t>> nullspace(const FieldTower& T, int level,
                                                  const std::vector<std::vector<std::uint64_t>>& rows,
                                                  int ncols);

}  // namespace qc2
