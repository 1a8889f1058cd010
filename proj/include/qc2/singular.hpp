// Singular locus of a normal quartic surface in P^3 over GF(2^m)-towers:
// locating all geometric singular points, classifying each double point by
// its tangent quadric, and computing Gaussian defects (the local
// intersection multiplicity of (F, F1, F2) in generic coordinates).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qc2/linalg.hpp"
#include "qc2/solve.hpp"

namespace qc2 {

struct QuarticSurface {
    MultiPoly F;  // homogeneous of degree 4 in 4 variables

    // Validates degree, arity, nonzero, and rejects perfect squares (the
    // zero set would be non-reduced).
    static QuarticSurface make(MultiPoly F);
    const FieldTower& tower() const { return F.tower(); }
};

enum class SingKind { Node, Biplanar, Uniplanar, TripleOrWorse };
enum class RdpStatus { RDP, RDP_BY_DEFECT, UNKNOWN };

struct DefectResult {
    bool infinite = false;  // every trial failed to stabilize
    int value = 0;
    bool stable = true;  // all trials finite and equal
};

struct SingularPointRecord {
    ProjPoint point;
    int ext_degree = 1;  // degree of the field of definition = orbit size
    SingKind kind = SingKind::Node;
    std::optional<int> an_index;  // for Node / Biplanar
    DefectResult defect;
    int local_length = 0;  // colength of the full singular-scheme ideal at P
    RdpStatus rdp_status = RdpStatus::UNKNOWN;
};

struct SingularLocusReport {
    std::vector<SingularPointRecord> points;  // one per Galois orbit
    int total_length = 0;                     // scheme length of (F, F0..F3)
    bool complete = false;                    // sum of local lengths == total
    // Geometric counts (orbit sizes summed).
    int nu = 0;  // all double points
    int b = 0;   // biplanar among them
    int u = 0;   // uniplanar among them
    int triple_or_worse = 0;

    int geometric_count() const { return nu + triple_or_worse; }
    long long defect_sum() const;
    bool any_defect_infinite() const;
};

struct FindOptions {
    int max_ext_degree = 3;
    std::uint64_t seed = 0;
    int defect_trials = 3;
    int colength_cap = 40;
    int scheme_d_max = 24;
    // Early positive-dimension bail for the global scheme length.
    int bail_bound = 400;
    SolveStrategy strategy = SolveStrategy::Auto;
};

// All geometric singular points over extensions of degree <= max_ext_degree,
// with local lengths, classification and defects. Throws NonNormalError when
// the singular scheme is positive-dimensional, CertificationError when the
// degree cap cannot certify either way.
SingularLocusReport find_singular_points(const QuarticSurface& X, const FindOptions& opt = {});

// The homogeneous singular-scheme ideal (F, F0, F1, F2, F3).
IdealPresentation singular_ideal(const QuarticSurface& X);

// Local equation of X at P (three affine variables, P at the origin).
MultiPoly local_equation(const QuarticSurface& X, const ProjPoint& P);

// Rank/kernel classification of the tangent quadric at a singular point.
SingKind classify_quadric_part(const QuarticSurface& X, const ProjPoint& P);

// min over `trials` random linear coordinate changes of the local colength
// of (F, F1, F2); infinite only when every trial fails to stabilize.
DefectResult gaussian_defect(const QuarticSurface& X, const ProjPoint& P, int trials,
                             std::uint64_t seed, int colength_cap = 40);

// defect - 1 for nodes and biplanar points (the n of A_n).
int an_index(const SingularPointRecord& rec);

}  // namespace qc2
