// Abstract Picard-sublattice arithmetic: Gram matrices spanned by the
// hyperplane class, ADE configurations of exceptional (-2)-curves and line
// classes; reflection reduction of effective isotropic classes; the
// Shioda-Tate rank lower bound. Purely lattice-theoretic: effectivity and
// fixed parts are geometry and are not modelled here.
#pragma once

#include <string>
#include <vector>

#include "qc2/weierstrass.hpp"

namespace qc2 {

enum class AdeKind { A, D, E };

struct AdeType {
    AdeKind kind;
    int n;  // A_n (n>=1), D_n (n>=4), E_n (n in {6,7,8})
};

struct DivisorClass {
    std::vector<long long> c;
};

struct LatticeBasis {
    std::vector<std::string> labels;            // H, C<i>_<j>, L<k>
    std::vector<std::vector<long long>> gram;

    int rank() const { return static_cast<int>(gram.size()); }

    // H first, then one block of exceptional classes per ADE type (negated
    // Cartan matrices), then line classes with L^2 = -2, H.L = 1 and the
    // given intersections against the exceptional classes.
    static LatticeBasis quartic_basis(const std::vector<AdeType>& ade, int num_lines = 0,
                                      const std::vector<std::vector<long long>>& line_exc = {});
    // H^2 = 4; every other class has self-intersection -2; ADE blocks equal
    // negated Cartan matrices (negative definite, checked by signed minors).
    void validate() const;

    DivisorClass unit(int i) const;
};

long long self_int(const LatticeBasis& B, const DivisorClass& D);
long long pair_int(const LatticeBasis& B, const DivisorClass& D, const DivisorClass& E);

// Repeatedly applies D -> D + (D.E) E for the first listed (-2)-class with
// D.E < 0, until all pairings are nonnegative. Preserves D^2 = 0; an
// iteration cap guards against inconsistent input.
DivisorClass reflect_reduce(const LatticeBasis& B, DivisorClass D,
                            const std::vector<DivisorClass>& minus_two_classes,
                            int iteration_cap = 10000);

// rho >= 2 + sum (m_v - 1) for an elliptic surface with a section; 0 (no
// claim) without one.
int shioda_tate_lower(const std::vector<KodairaType>& fibers, bool has_section);

// Negated Cartan matrix of one ADE type.
std::vector<std::vector<long long>> negated_cartan(const AdeType& t);

}  // namespace qc2
