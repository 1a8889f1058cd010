// Degree-formula accounting for the Gauss map of a normal quartic, detection
// of a planar dual surface via the kernel of c -> sum c_i dF/dx_i, and exact
// incidence combinatorics of singular-point configurations.
#pragma once

#include <optional>

#include "qc2/singular.hpp"

namespace qc2 {

struct DegreeLedger {
    long long defect_sum = 0;
    long long product = 0;  // deg(gauss) * deg(dual) = 36 - defect_sum
    int nu = 0, b = 0, u = 0;
    bool bound_ok = false;  // defect_sum >= 2 nu + b + 6 u
};

// Requires a complete report; throws std::invalid_argument otherwise.
DegreeLedger degree_ledger(const SingularLocusReport& report);

// Basis of { c in K^4 : sum c_i dF/dx_i = 0 }. Dimension 1 means the dual
// surface lies in a plane; dimension >= 2 cannot happen on a normal quartic.
std::vector<std::vector<FieldElem>> dual_plane_kernel(const QuarticSurface& X);

// ledger.product when kernel_dim == 1, otherwise nothing.
std::optional<long long> gauss_degree_if_dual_plane(const DegreeLedger& ledger, int kernel_dim);

struct LineIncidence {
    int i, j;            // defining pair (indices into the point list)
    int points_on_line;  // how many of the input points lie on it
};

struct ConfigurationReport {
    std::vector<LineIncidence> lines;  // one entry per distinct line through >= 2 points
    int max_collinear = 0;
    int max_coplanar = 0;
    // pairs not collinear with any third point
    std::vector<std::pair<int, int>> companion_pairs;
    bool has_point_with_two_companions = false;
    bool collinear_bound_ok = true;  // max_collinear <= 3
    bool coplanar_bound_ok = true;   // max_coplanar <= 6
};

// Exact incidence combinatorics over the field tower; points must be
// pairwise distinct.
ConfigurationReport configuration_report(const std::vector<ProjPoint>& points);

// Expand report orbits into the full list of geometric points.
std::vector<ProjPoint> geometric_points(const SingularLocusReport& report);

}  // namespace qc2
