// Zero-dimensional projective system solving over field towers. Points are
// located chart by chart (the standard charts partition P^n, so coverage
// needs no position assumption); within a chart either by exhaustive fiber
// enumeration over the tower levels, or by resultant elimination to
// univariate polynomials followed by root finding.
#pragma once

#include <cstdint>
#include <vector>

#include "qc2/point.hpp"

namespace qc2 {

enum class SolveStrategy {
    Auto,        // enumeration for small fields, resultants beyond
    Enumerate,   // exhaustive fiber scan over the tower levels
    Resultants,  // elimination to univariate polynomials, then uni_roots
};

// All points of V(gens) in P^n (n+1 = num_vars) defined over tower levels
// <= max_ext_degree, one orbit-canonical representative per Galois orbit,
// every candidate verified against the full system. Throws NonNormalError
// when a whole coordinate line or fiber line satisfies the system.
std::vector<ProjPoint> solve_projective_system(const std::vector<MultiPoly>& gens,
                                               int max_ext_degree, std::uint64_t seed,
                                               SolveStrategy strategy = SolveStrategy::Auto);

}  // namespace qc2
