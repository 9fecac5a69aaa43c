#pragma once

// Independent brute-force recomputations of the counting, Xi-family, and
// omega-membership answers, used by the test suite and the CLI --verify mode.
// Each oracle takes a deliberately different route than the main library:
// literal orbit enumeration instead of the closed counting formula, literal
// subgroup enumeration instead of the epsilon calculus, and the per-coset
// intersection formula instead of the image-intersection computation.

#include "df/jumploci.hpp"

namespace df {

// |Epi(H,A)/Aut(A)| for the reduced pair (free part of H collapsed modulo
// the exponent of Tors A, Tors A), counted by explicit orbit enumeration.
// Agrees with gamma_count; size_bound caps the number of candidate maps.
Int oracle_gamma_count(const FgAbGroup& h, const FgAbGroup& a,
                       const Int& size_bound = 2000000);

// Literal Xi_d: enumerate every subgroup with cyclic quotient of index at
// most index_bound under a component saturation, then keep the ones cut out
// by a maximal positive-dimensional translated coset of w whose translation
// order divides d.  Torsion-free parents of rank <= 3 only.
std::vector<Subgroup> oracle_xi(const Arrangement& w, const Int& d, const Int& index_bound);

struct OmegaAgreementSample {
    Homomorphism nu;
    bool not_upsilon;                // finite image intersection, directly
    bool intersection_form;          // per-coset sigma / epsilon formula
    std::optional<bool> rank1_form;  // U_{A,c(A)} form, rank-1 targets only
    bool agree = false;
};

struct OmegaAgreementReport {
    std::vector<OmegaAgreementSample> samples;
    bool all_agree = true;
    std::vector<std::string> traces;  // one line per disagreement
};

// Evaluate omega membership for every sample through each applicable
// formula and record whether they coincide.
OmegaAgreementReport oracle_omega_agreement(const FgAbGroup& h, const FgAbGroup& a,
                                            const Arrangement& w,
                                            const std::vector<Homomorphism>& sample);

}  // namespace df
