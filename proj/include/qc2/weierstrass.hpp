// Characteristic-2 Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 +
// a4 x + a6 over k[t] in the K3 range deg a_i <= 2i: the discriminant,
// quasi-elliptic detection, Tate's algorithm with wild ramification indices,
// the per-fiber table with N_v, the Euler-number ledger, square-discriminant
// coefficient constraints, and the I*_2n / quasi-elliptic normal forms.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qc2/unipoly.hpp"

namespace qc2 {

struct QuasiEllipticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class KodairaFamily { In, II, III, IV, InStar, IVStar, IIIStar, IIStar };

struct KodairaType {
    KodairaFamily family = KodairaFamily::In;
    int n = 0;  // only for In (n >= 0; 0 = good reduction) and InStar (n >= 0)

    std::string name() const;
    bool operator==(const KodairaType& o) const { return family == o.family && n == o.n; }
};

struct FiberTableRow {
    int m_v;        // number of components
    int delta_min;  // minimal wild ramification index
    int e_v;        // Euler number
    int N_v;        // maximal number of disjoint (-2) fiber components
    bool delta_exact;  // the index is forced, not just bounded below
};

FiberTableRow fiber_table(const KodairaType& t);

struct WeierstrassModel {
    UniPoly a1, a2, a3, a4, a6;

    // Enforces the K3 degree bounds deg a_i <= 2i and a common tower level.
    static WeierstrassModel make(UniPoly a1, UniPoly a2, UniPoly a3, UniPoly a4, UniPoly a6);
    const FieldTower& tower() const { return a1.tower(); }
    int level() const { return a1.level(); }
};

// Delta = a3^4 + a1^3 a3^3 + a1^4 a4^2 + a1^4 a2 a3^2 + a1^5 a3 a4 + a1^6 a6.
UniPoly discriminant(const WeierstrassModel& W);

// No terms linear in y; then the discriminant vanishes identically.
bool is_quasi_elliptic(const WeierstrassModel& W);

// All odd-degree coefficients vanish (over a perfect field this says the
// polynomial is a square).
bool is_square_poly(const UniPoly& p);

struct Place {
    bool at_infinity = false;
    UniPoly pi;  // monic irreducible over the model level; unused at infinity

    static Place infinity(const FieldTower& T, int level);
    static Place finite(UniPoly pi);  // verifies irreducibility
    int degree() const { return at_infinity ? 1 : pi.degree(); }
};

struct FiberReport {
    Place place;
    KodairaType type;
    int m_v = 1;
    int e_v = 0;
    int v_delta = 0;  // valuation of the minimal discriminant at the place
    int delta_v = 0;  // wild ramification = v_delta - e_v
    int N_v = 0;
    int minimalization_steps = 0;
};

// Kodaira type and wild ramification of the fiber at a place; the model is
// localized (extending scalars to split the place), translated, and run
// through the characteristic-safe step sequence, minimalizing on loops.
// Throws QuasiEllipticError for quasi-elliptic input.
FiberReport tate_fiber(const WeierstrassModel& W, const Place& place, int max_ext_degree = 8);

struct EulerLedger {
    std::vector<FiberReport> places;  // singular fibers only, one per closed place
    long long total = 0;  // sum over geometric places of (e_v + delta_v)
};

// All places including infinity; total should be 24 exactly for a K3-range
// model that is globally minimal.
EulerLedger euler_ledger(const WeierstrassModel& W, int max_ext_degree = 8);

struct DisjointSum {
    int sum = 0;         // geometric sum of N_v
    bool bound_ok = false;   // sum <= 12
    bool cor12_ok = false;   // when sum == 12: types restricted, delta minimal
};

DisjointSum max_disjoint_sum(const std::vector<FiberReport>& reports);

// y^2 + t^2 xy + t^(n+2) a3' y = x^3 + t a2' x^2 + t^(n+2) a4' x + t^(2n+4) a6',
// with t not dividing a2' a4'; its fiber at t = 0 has type I*_2n.
WeierstrassModel normal_form_Istar(int n, const UniPoly& a2p, const UniPoly& a3p,
                                   const UniPoly& a4p, const UniPoly& a6p);

struct SquareDiscAssignment {
    bool consistent = false;
    UniPoly a2p, a3p, a4p, a6p;  // with the forced coefficients substituted
    std::vector<std::string> notes;
};

// For the I*_0 normal form with t not dividing a3': eliminates the odd-degree
// discriminant coefficients, forcing a2'_0 = a3'_1, the a4'_1 formula, and
// the odd coefficients of a6'. The resulting discriminant is a square.
SquareDiscAssignment square_disc_constraints_Istar0(UniPoly a2p, UniPoly a3p, UniPoly a4p,
                                                    UniPoly a6p);

// The possible fiber types of a quasi-elliptic fibration in characteristic 2.
std::vector<std::string> quasi_elliptic_types();
bool quasi_elliptic_type_possible(const KodairaType& t);
// Only II and III are reduced.
bool quasi_elliptic_type_reduced(const KodairaType& t);

// (x, y) -> (u^2 x + r, u^3 y + u^2 s x + w) transformation of the model.
WeierstrassModel transform_model(const WeierstrassModel& W, const FieldElem& u, const UniPoly& r,
                                 const UniPoly& s, const UniPoly& w);

}  // namespace qc2
