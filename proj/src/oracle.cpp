#include "df/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace df {
namespace {

Int int_pow(const Int& b, std::size_t e) {
    Int r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= b;
    return r;
}

bool subgroup_contains(const Subgroup& big, const Subgroup& small) {
    return subgroup_sum(small, big) == big;
}

// maximal positive-dimensional translated cosets of w, by pairwise
// containment over the full component expansion
std::vector<TranslatedSubgroup> brute_maximal_cosets(const Arrangement& w) {
    std::vector<TranslatedSubgroup> expanded;
    for (const auto& comp : w.components)
        for (const auto& c : components_of(comp))
            if (c.dim() > 0) expanded.push_back(c);
    std::vector<TranslatedSubgroup> out;
    for (std::size_t i = 0; i < expanded.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < expanded.size() && !dominated; ++j)
            if (i != j && coset_containment(expanded[i], expanded[j]) &&
                !coset_containment(expanded[j], expanded[i]))
                dominated = true;
        if (!dominated) out.push_back(expanded[i]);
    }
    return out;
}

}  // namespace

Int oracle_gamma_count(const FgAbGroup& h, const FgAbGroup& a, const Int& size_bound) {
    const std::size_t n = h.free_rank();
    const std::size_t r = a.free_rank();
    if (r > n) return 0;
    if (a.torsion_count() == 0) return is_quotient_of(a, h) ? 1 : 0;

    // a homomorphism from Z^{n-r} to a finite group of exponent N factors
    // through (Z_N)^{n-r}, so the reduced pair is fully finite
    const Int exponent = a.torsion_factors().back();
    std::vector<Int> factors(n - r, exponent);
    for (const Int& d : h.torsion_factors()) factors.push_back(d);
    FgAbGroup reduced = FgAbGroup::from_invariants(0, factors);
    FgAbGroup tors_a = FgAbGroup::from_invariants(0, a.torsion_factors());

    if (int_pow(a.torsion_order(), reduced.torsion_count()) > size_bound)
        throw bound_error("oracle_gamma_count: enumeration too large");
    return Int(enumerate_epis_mod_aut(reduced, tors_a).size());
}

std::vector<Subgroup> oracle_xi(const Arrangement& w, const Int& d, const Int& index_bound) {
    if (d <= 0) throw input_error("oracle_xi: order bound must be positive");
    if (index_bound < d) throw bound_error("oracle_xi: index bound below the order bound");
    for (const auto& c : w.components)
        if (c.xi.parent().torsion_count() != 0 || c.xi.parent().preimage_rank() > 3)
            throw input_error("oracle_xi: torsion-free parents of rank <= 3 only");

    const auto maximal = brute_maximal_cosets(w);

    // candidate subgroups: kernels of surjections of a component saturation
    // onto Z_k, k <= index_bound; these are exactly the cyclic-quotient
    // subgroups of bounded index below that saturation
    std::set<Subgroup> seen_sat;
    std::set<Subgroup> candidates;
    const long long kmax = index_bound.convert_to<long long>();
    for (const auto& c : maximal) {
        if (!seen_sat.insert(c.xi).second) continue;
        const IntMatrix& basis = c.xi.preimage().generators();
        const std::size_t m = basis.cols();
        for (long long k = 1; k <= kmax; ++k) {
            Int total = int_pow(Int(k), m);
            if (total > 500000) throw bound_error("oracle_xi: candidate scan too large");
            std::vector<long long> cf(m, 0);
            for (Int step = 0; step < total; ++step) {
                Int g = k;
                for (std::size_t t = 0; t < m; ++t) g = gcd(g, Int(cf[t]));
                if (g == 1 || (m == 0 && k == 1)) {
                    IntMatrix rel(1, m + 1);
                    for (std::size_t t = 0; t < m; ++t) rel.at(0, t) = cf[t];
                    rel.at(0, m) = k;
                    IntMatrix kb = kernel_basis(rel);
                    IntMatrix y(m, kb.cols());
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = 0; j < kb.cols(); ++j) y.at(i, j) = kb.at(i, j);
                    candidates.insert(Subgroup(c.xi.parent(), basis * y));
                }
                for (std::size_t t = 0; t < m; ++t) {
                    if (++cf[t] < k) break;
                    cf[t] = 0;
                }
            }
        }
    }

    // keep a candidate iff some maximal coset realizes it: matching
    // saturation, translation order dividing d, and matching kernel cut
    std::vector<Subgroup> out;
    for (const Subgroup& xi : candidates) {
        Subgroup sat = subgroup_saturation(xi);
        bool realized = false;
        for (const auto& c : maximal) {
            if (c.xi != sat) continue;
            if (d % order_on(c.eta, c.xi) != 0) continue;
            if (subgroup_intersection(c.xi, character_kernel(c.eta)) == xi) {
                realized = true;
                break;
            }
        }
        if (realized) out.push_back(xi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

OmegaAgreementReport oracle_omega_agreement(const FgAbGroup& h, const FgAbGroup& a,
                                            const Arrangement& w,
                                            const std::vector<Homomorphism>& sample) {
    for (const auto& c : w.components)
        if (c.xi.parent() != h) throw input_error("oracle_omega_agreement: parent mismatch");

    // premise of the per-coset formula: the full subgroup for isolated
    // points, the given (xi, eta) for each component
    std::vector<TranslatedSubgroup> cosets(w.components.begin(), w.components.end());
    IntMatrix full(h.preimage_rank(), h.preimage_rank());
    for (std::size_t i = 0; i < h.preimage_rank(); ++i) full.at(i, i) = 1;
    for (const auto& p : w.points) cosets.emplace_back(Subgroup(h, full), p);

    std::optional<std::vector<Subgroup>> rank1_xis;
    Int c_a = cyclic_exponent(a);
    if (a.free_rank() == 1) rank1_xis = xi_d(w, c_a);

    OmegaAgreementReport rep;
    for (const auto& nu : sample) {
        if (nu.source() != h || nu.target() != a)
            throw input_error("oracle_omega_agreement: sample with wrong source or target");
        OmegaAgreementSample s{nu, false, true, std::nullopt};

        s.not_upsilon = !upsilon_member(nu, w);

        // member iff for every coset: not sigma, or the kernel of the
        // translation character fails to contain ker(nu) meet xi
        Subgroup ker = nu.kernel();
        for (const auto& c : cosets) {
            if (!sigma_member(nu, c.xi)) continue;
            Subgroup cut = subgroup_intersection(ker, c.xi);
            if (subgroup_contains(character_kernel(c.eta), cut)) {
                s.intersection_form = false;
                break;
            }
        }

        if (rank1_xis) {
            bool in_u = false;
            for (const Subgroup& xi : *rank1_xis)
                if (u_member(nu, xi)) in_u = true;
            s.rank1_form = !in_u;
        }

        s.agree = s.not_upsilon == s.intersection_form &&
                  (!s.rank1_form || *s.rank1_form == s.not_upsilon);
        if (!s.agree) {
            rep.all_agree = false;
            std::ostringstream os;
            os << "nu=" << nu.str() << " direct=" << s.not_upsilon
               << " intersection=" << s.intersection_form << " rank1=";
            if (s.rank1_form)
                os << *s.rank1_form;
            else
                os << "-";
            rep.traces.push_back(os.str());
        }
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

}  // namespace df
