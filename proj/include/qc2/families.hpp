// The explicit quartic families: strange points of plane curves of even
// degree, Klein forms, the z^4 + B family with seven A3 points, the two
// 14-node families with planar dual, the inseparable-projection family with
// its scheme lengths, and the unique square decomposition of plane quartics.
#pragma once

#include <string>

#include "qc2/singular.hpp"

namespace qc2 {

// A plane curve of even degree d = 2m in the variables (x1, x2, x3).
struct PlaneCurve {
    MultiPoly B;

    static PlaneCurve make(MultiPoly B);  // validates arity 3, even degree, nonzero
    int degree() const { return *B.homogeneous_degree(); }
};

// B0 = x1^(2m-1) x2 + x2^(2m-1) x3 + x3^(2m-1) x1, degree 2m.
PlaneCurve klein_form(const FieldTower& T, int m);

struct StrangePoint {
    ProjPoint point;
    int multiplicity;
    int ext_degree;
};

struct StrangeLocus {
    std::vector<StrangePoint> points;  // one representative per Galois orbit
    int length = 0;
    bool finite = false;
    // Certificate through the complete-intersection split in generic
    // coordinates: {B1 = B2 = 0} of length (d-1)^2 minus the length-(d-2)
    // piece on the moved line, checked disjoint from the critical locus.
    bool split_certificate = false;
    int geometric_count() const;
};

// Critical locus of B (all points where the gradient vanishes), with
// multiplicities. The expected length is (d-1)(d-2)+1.
StrangeLocus strange_points(const PlaneCurve& B, int max_ext_degree, std::uint64_t seed = 0);

// B = q^2 + B', with B' spanned by the odd-exponent quartic monomials; the
// decomposition is unique and grad B = grad B'.
std::pair<MultiPoly, MultiPoly> decompose_square(const PlaneCurve& B);

struct VerifyResult {
    bool ok = false;
    SingularLocusReport locus;
    std::vector<std::string> diagnostics;
};

// X = { z^4 + B(x) = 0 }: at most 7 singular points; for good B exactly 7 of
// type A3 (biplanar, defect 4).
QuarticSurface family_a3(const PlaneCurve& B);
VerifyResult verify_a3(const QuarticSurface& X, const PlaneCurve& B, const FindOptions& opt = {});

// X = { z^4 + z^2 x1^2 + B(x) = 0 }: two points over each strange point of B
// when the line x1 = 0 misses them; 14 nodes, planar dual, Gauss degree 8.
QuarticSurface family_special(const PlaneCurve& B);
VerifyResult verify_special(const QuarticSurface& X, const PlaneCurve& B,
                            const FindOptions& opt = {});

struct InsepReport {
    bool ok = false;
    int len_base = 0;   // {Q = B = 0}, expected 8
    int len_line = 0;   // {x3 = q^2 = 0}, expected 4
    int len_hb = 0;     // Hilbert-Burch scheme, expected 17
    int len_s = 0;      // residual scheme, 17 - 4 = 13
    bool disjoint = false;
    bool node_at_center = false;  // the node at x = 0
    SingularLocusReport locus;
    std::vector<std::string> diagnostics;
};

// X = { z^2 (x1 x2 + x3^2) + B(x) = 0 }: inseparable projection from the
// node at x = 0; scheme lengths (8, 4, 17, 13) for B = B' + q^2 general.
QuarticSurface family_insep(const PlaneCurve& B);
InsepReport verify_insep(const QuarticSurface& X, const PlaneCurve& B, const FindOptions& opt = {});

// X = { z^4 + z^2 (x1 x2 + lambda x3^2) + B(x) = 0 }.
QuarticSurface family_dual_plane(const FieldElem& lambda, const PlaneCurve& B);
VerifyResult verify_dual_plane(const QuarticSurface& X, const PlaneCurve& B,
                               const FindOptions& opt = {});

// Intersection multiplicity of {B3 = 0} and {B1^2 + B1 x2 Q + B x2^2 = 0} at
// the distinguished point P' = {x2 = b31 x3^2 + b13 x1^2 = 0}. The singular
// point count of the dual-plane family is 18 minus this number.
int dual_plane_excess(const FieldElem& lambda, const PlaneCurve& B);

// Klein + q^2, the operational meaning of "general B".
PlaneCurve seeded_general_quartic(const FieldTower& T, std::uint64_t seed);

}  // namespace qc2
