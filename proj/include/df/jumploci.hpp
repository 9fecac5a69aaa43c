#pragma once

// The combinatorial core: maximal translated subtori of an arrangement, the
// Xi_d / tau_d subgroup and lattice families, the incidence predicates
// sigma / U / theta on classes of epimorphisms, Upsilon-membership against
// arrangements, quasi-projective unions and hypersurfaces, Omega membership
// and closed-form descriptions, singular-set fiber probes, and pullback
// diagnostics for finite-torsion quotients.

#include "df/chargroup.hpp"
#include "df/laurent.hpp"

#include <optional>
#include <string>

namespace df {

// Expand every component into cosets of its identity subtorus, drop the
// finite ones, and keep only cosets not contained in another.
std::vector<TranslatedSubgroup> maximal_translated_tori(const Arrangement& w);

// Subgroups xi = chi_bar intersect ker(beta) over maximal cosets beta V(chi_bar)
// whose translation order on chi_bar divides d.
std::vector<Subgroup> xi_d(const Arrangement& w, const Int& d);

// Inclusion-maximal dual lattices (H/xi)^dual over xi_d.
std::vector<Lattice> tau_d(const Arrangement& w, const Int& d);

// The lcm of the translation orders of the maximal cosets; Xi_d stabilizes at
// every multiple of it.
Int xi_exponent(const Arrangement& w);

// rank(ker(nu) + xi) < rank H
bool sigma_member(const Homomorphism& nu, const Subgroup& xi);
// sigma AND ker(nu) intersect sat(xi) contained in xi
bool u_member(const Homomorphism& nu, const Subgroup& xi);
// exists xi <= xi' < sat(xi) with cyclic quotient sat(xi)/xi' and
// ker(nu) intersect sat(xi) contained in xi'; via the determinant-group dual
bool theta_member(const Homomorphism& nu, const Subgroup& xi);

// Membership in the union over all d of the U_{A,d} obstruction sets of w.
bool u_bound_member(const Homomorphism& nu, const Arrangement& w);

struct UpsilonWitness {
    TranslatedSubgroup image_coset;    // component of the dual image of nu
    TranslatedSubgroup variety_coset;  // component of w meeting it
    long long dim = 0;
};

// dim(image of the induced dual map intersected with w) > 0.  Points in
// w.points never contribute.  The optional witness receives the first
// positive-dimensional meet found.
bool upsilon_member(const Homomorphism& nu, const Arrangement& w,
                    UpsilonWitness* witness = nullptr);
// Hypersurface form: some component of the dual image restricts the
// polynomial to a positive-dimensional zero locus.
bool upsilon_member(const Homomorphism& nu, const LaurentPolynomial& f);

// A characteristic variety given as full subgroups V(xi), deleted subgroups
// V(xi) minus its identity component V(sat xi), and isolated points.
struct QuasiProjectiveV1 {
    std::vector<Subgroup> full;
    std::vector<Subgroup> deleted;
    std::vector<TorsionCharacter> points;
};
bool upsilon_member(const Homomorphism& nu, const QuasiProjectiveV1& w);

// NOT Upsilon; the arrangement form is recomputed through the closed
// per-component formula and the two answers are required to agree.
bool omega_member(const Homomorphism& nu, const Arrangement& w);
bool omega_member(const Homomorphism& nu, const LaurentPolynomial& f);
bool omega_member(const Homomorphism& nu, const QuasiProjectiveV1& w);

enum class ReportMode { rank1_exact, arrangement_exact, upper_bound_only };
enum class ConstituentKind { u_set, sigma_set, sigma_and_theta };

struct ObstructionConstituent {
    Subgroup xi;
    ConstituentKind kind;
    std::optional<TorsionCharacter> witness_eta;
};

struct ObstructionReport {
    FgAbGroup h;
    FgAbGroup a;
    ReportMode mode;
    std::vector<ObstructionConstituent> constituents;
    Int c;

    // [nu] lies in the union of the constituent obstruction sets
    bool excluded(const Homomorphism& nu) const;
};

// Exact description of the Omega complement: rank-1 quotients via Xi_{c(A)},
// untranslated arrangements via sigma constituents, general arrangements via
// Xi_c with c = lcm(ord(eta_j) * c(det group of xi_j)).
ObstructionReport omega_describe(const FgAbGroup& h, const FgAbGroup& a, const Arrangement& w);
// Exact description for quasi-projective unions (sigma and sigma&theta terms).
ObstructionReport omega_describe(const FgAbGroup& h, const FgAbGroup& a,
                                 const QuasiProjectiveV1& w);
// Hypersurface input: only the order-1 obstructions are listed, so the
// described set is an upper bound for Omega and the mode says so.
ObstructionReport omega_describe(const FgAbGroup& h, const FgAbGroup& a,
                                 const LaurentPolynomial& f);

struct SingularProbe {
    bool base_in_omega = false;  // the free-quotient class itself
    std::size_t fiber_size = 0;
    std::size_t in_omega_count = 0;
    std::vector<Homomorphism> members;
    std::vector<bool> member_in_omega;

    bool in_singular_set() const { return base_in_omega && in_omega_count < fiber_size; }
};

// Enumerate the fiber of Gamma(H,A) -> Gamma(H, free part of A) over nu_bar
// and test Omega membership of every representative.
SingularProbe singular_set_probe(const Arrangement& w, const FgAbGroup& a,
                                 const Homomorphism& nu_bar);
SingularProbe singular_set_probe(const QuasiProjectiveV1& w, const FgAbGroup& a,
                                 const Homomorphism& nu_bar);

enum class PullbackVerdict { guaranteed_pullback, guaranteed_strict, inconclusive };

struct PullbackDiagnosis {
    PullbackVerdict verdict = PullbackVerdict::inconclusive;
    std::string reason;
};

// Syntactic hypothesis checks: translation orders coprime to |Tors A| give a
// guaranteed pullback Omega_A = q^{-1}(Omega_Abar); the single-coset and
// transversality criteria certify strictness of the inclusion.
PullbackDiagnosis pullback_diagnostics(const Arrangement& w, const FgAbGroup& a);

}  // namespace df
