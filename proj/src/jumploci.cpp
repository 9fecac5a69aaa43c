#include "df/jumploci.hpp"

#include "df/limits.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace df {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

bool rat_is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

void check_epi(const Homomorphism& nu, const char* who) {
    if (!nu.is_epi()) throw input_error(std::string(who) + ": nu must be an epimorphism");
}

void check_parent(const Homomorphism& nu, const Subgroup& xi, const char* who) {
    if (nu.source() != xi.parent()) throw input_error(std::string(who) + ": parent mismatch");
}

// All cosets of the identity component of the dual image of nu, i.e. the
// components of the full algebraic subgroup cut out by ker(nu).
std::vector<TranslatedSubgroup> image_components(const Homomorphism& nu) {
    return components_of(v_of(nu.kernel()));
}

}  // namespace

// ===================================================================
// maximal cosets, Xi_d, tau_d
// ===================================================================

std::vector<TranslatedSubgroup> maximal_translated_tori(const Arrangement& w) {
    std::vector<TranslatedSubgroup> cosets;
    std::set<TranslatedSubgroup> seen;
    for (const auto& c : w.components)
        for (const auto& piece : components_of(c)) {
            if (piece.dim() <= 0) continue;
            if (seen.insert(piece).second) cosets.push_back(piece);
        }
    // Equal cosets may survive the set dedup under different translation
    // representatives; mutual containment then keeps the earlier one.
    std::vector<bool> dead(cosets.size(), false);
    for (std::size_t i = 0; i < cosets.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = i + 1; j < cosets.size(); ++j) {
            if (dead[j]) continue;
            if (coset_containment(cosets[j], cosets[i]))
                dead[j] = true;
            else if (coset_containment(cosets[i], cosets[j])) {
                dead[i] = true;
                break;
            }
        }
    }
    std::vector<TranslatedSubgroup> out;
    for (std::size_t i = 0; i < cosets.size(); ++i)
        if (!dead[i]) out.push_back(cosets[i]);
    return out;
}

namespace {

// xi = chi_bar intersect ker(beta) for each maximal coset beta V(chi_bar)
// whose restricted translation order divides d, keyed by xi with the first
// producing coset's translation as witness.
std::map<Subgroup, TorsionCharacter> xi_d_with_witness(const Arrangement& w, const Int& d) {
    if (d <= 0) throw input_error("xi_d: d must be positive");
    std::map<Subgroup, TorsionCharacter> out;
    for (const auto& c : maximal_translated_tori(w)) {
        Int dp = order_on(c.eta, c.xi);
        if (d % dp != 0) continue;
        out.emplace(epsilon_of_cyclic_extension(c.xi, c.eta), c.eta);
    }
    return out;
}

}  // namespace

std::vector<Subgroup> xi_d(const Arrangement& w, const Int& d) {
    std::vector<Subgroup> out;
    for (const auto& [xi, eta] : xi_d_with_witness(w, d)) out.push_back(xi);
    return out;
}

std::vector<Lattice> tau_d(const Arrangement& w, const Int& d) {
    std::vector<Lattice> cand;
    for (const auto& xi : xi_d(w, d)) {
        const std::size_t n = xi.parent().free_rank();
        const IntMatrix& g = xi.preimage().generators();
        if (g.cols() == 0) {
            cand.push_back(Lattice::full(n));
            continue;
        }
        // integer functionals on the free part vanishing on xi
        IntMatrix rows(g.cols(), n);
        for (std::size_t j = 0; j < g.cols(); ++j)
            for (std::size_t i = 0; i < n; ++i) rows.at(j, i) = g.at(i, j);
        cand.emplace_back(n, kernel_basis(rows));
    }
    std::vector<Lattice> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cand.size(); ++j) {
            if (i == j) continue;
            if (cand[j].contains(cand[i]) && cand[i] != cand[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(cand[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int xi_exponent(const Arrangement& w) {
    Int e = 1;
    for (const auto& c : maximal_translated_tori(w)) e = lcm_int(e, order_on(c.eta, c.xi));
    return e;
}

// ===================================================================
// incidence predicates
// ===================================================================

bool sigma_member(const Homomorphism& nu, const Subgroup& xi) {
    check_parent(nu, xi, "sigma_member");
    check_epi(nu, "sigma_member");
    return subgroup_sum(nu.kernel(), xi).rank() < xi.parent().free_rank();
}

bool u_member(const Homomorphism& nu, const Subgroup& xi) {
    check_parent(nu, xi, "u_member");
    check_epi(nu, "u_member");
    Subgroup k = nu.kernel();
    if (subgroup_sum(k, xi).rank() >= xi.parent().free_rank()) return false;
    return xi.contains(subgroup_intersection(k, subgroup_saturation(xi)));
}

bool theta_member(const Homomorphism& nu, const Subgroup& xi) {
    check_parent(nu, xi, "theta_member");
    check_epi(nu, "theta_member");
    Subgroup sat = subgroup_saturation(xi);
    if (sat == xi) return false;  // no proper intermediate subgroup exists

    // Intermediate xi' with cyclic quotient sat/xi' are the kernels of the
    // nontrivial characters of the finite group sat/xi; one of them contains
    // ker(nu) intersect sat iff some such character kills that subgroup.
    const Lattice& sat_pre = sat.preimage();
    const IntMatrix& b = sat_pre.generators();
    const std::size_t r = b.cols();
    const IntMatrix& p = xi.preimage().generators();
    if (p.cols() != r) throw internal_error("theta_member: saturation changed rank");
    IntMatrix coords(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        auto sol = sat_pre.solve(as_vector(p.col(j)));
        if (!sol) throw internal_error("theta_member: saturation misses subgroup");
        for (std::size_t i = 0; i < r; ++i) coords.at(i, j) = (*sol)[i];
    }
    auto snf = smith_normal_form(coords);
    std::vector<Int> s(r);
    Int total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        s[i] = snf.d.at(i, i);
        if (s[i] == 0) throw internal_error("theta_member: quotient not finite");
        total *= s[i];
    }
    if (total > Limits::det_group_order) throw bound_error("theta_member: subgroup index too large");

    // adapted coordinates of the generators of ker(nu) intersect sat
    Subgroup kbar = subgroup_intersection(nu.kernel(), sat);
    const IntMatrix& kg = kbar.preimage().generators();
    IntMatrix adapted(r, kg.cols());
    for (std::size_t j = 0; j < kg.cols(); ++j) {
        auto sol = sat_pre.solve(as_vector(kg.col(j)));
        if (!sol) throw internal_error("theta_member: kernel escapes saturation");
        for (std::size_t i = 0; i < r; ++i) {
            Int acc = 0;
            for (std::size_t l = 0; l < r; ++l) acc += snf.u.at(i, l) * (*sol)[l];
            adapted.at(i, j) = acc;
        }
    }

    std::vector<Int> tuple(r, Int(0));
    while (true) {
        std::size_t i = r;
        bool done = (r == 0);
        while (i > 0) {
            --i;
            if (++tuple[i] < s[i]) break;
            tuple[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
        bool kills = true;
        for (std::size_t j = 0; j < adapted.cols() && kills; ++j) {
            Rat acc(0);
            for (std::size_t l = 0; l < r; ++l) acc += Rat(tuple[l] * adapted.at(l, j), s[l]);
            if (!rat_is_integer(acc)) kills = false;
        }
        if (kills) return true;
    }
    return false;
}

bool u_bound_member(const Homomorphism& nu, const Arrangement& w) {
    check_epi(nu, "u_bound_member");
    Int e = xi_exponent(w);
    for (const auto& xi : xi_d(w, e))
        if (u_member(nu, xi)) return true;
    return false;
}

// ===================================================================
// Upsilon membership
// ===================================================================

bool upsilon_member(const Homomorphism& nu, const Arrangement& w, UpsilonWitness* witness) {
    check_epi(nu, "upsilon_member");
    for (const auto& c : w.components)
        if (c.xi.parent() != nu.source())
            throw input_error("upsilon_member: arrangement parent mismatch");
    std::vector<TranslatedSubgroup> img = image_components(nu);
    for (const auto& c : w.components)
        for (const auto& vc : components_of(c))
            for (const auto& ic : img) {
                CosetMeet m = coset_intersection(ic, vc);
                if (m.nonempty && m.dim > 0) {
                    if (witness) *witness = UpsilonWitness{ic, vc, m.dim};
                    return true;
                }
            }
    return false;
}

bool upsilon_member(const Homomorphism& nu, const LaurentPolynomial& f) {
    check_epi(nu, "upsilon_member");
    if (f.ambient() != nu.source())
        throw input_error("upsilon_member: hypersurface parent mismatch");
    Subgroup k = nu.kernel();
    for (const auto& ic : components_of(v_of(k)))
        if (hypersurface_positive_dim(restrict_to_coset(f, k, ic.eta))) return true;
    return false;
}

bool upsilon_member(const Homomorphism& nu, const QuasiProjectiveV1& w) {
    check_epi(nu, "upsilon_member");
    for (const auto& xi : w.full)
        if (sigma_member(nu, xi)) return true;
    for (const auto& xi : w.deleted)
        if (sigma_member(nu, xi) && theta_member(nu, xi)) return true;
    return false;
}

// ===================================================================
// Omega membership
// ===================================================================

bool omega_member(const Homomorphism& nu, const Arrangement& w) {
    bool member = !upsilon_member(nu, w);
    // independent per-component test: the image meets eta V(xi) in positive
    // dimension iff rank(ker + xi) drops and eta kills ker intersect xi
    Subgroup k = nu.kernel();
    const std::size_t n = nu.source().free_rank();
    bool closed = true;
    for (const auto& c : w.components) {
        if (subgroup_sum(k, c.xi).rank() >= n) continue;
        if (character_kernel(c.eta).contains(subgroup_intersection(k, c.xi))) {
            closed = false;
            break;
        }
    }
    if (closed != member) throw internal_error("omega_member: membership formulas disagree");
    return member;
}

bool omega_member(const Homomorphism& nu, const LaurentPolynomial& f) {
    return !upsilon_member(nu, f);
}

bool omega_member(const Homomorphism& nu, const QuasiProjectiveV1& w) {
    return !upsilon_member(nu, w);
}

// ===================================================================
// closed-form descriptions
// ===================================================================

bool ObstructionReport::excluded(const Homomorphism& nu) const {
    if (nu.source() != h || nu.target() != a)
        throw input_error("ObstructionReport: nu does not match the described pair");
    check_epi(nu, "ObstructionReport");
    for (const auto& c : constituents) {
        switch (c.kind) {
            case ConstituentKind::u_set:
                if (u_member(nu, c.xi)) return true;
                break;
            case ConstituentKind::sigma_set:
                if (sigma_member(nu, c.xi)) return true;
                break;
            case ConstituentKind::sigma_and_theta:
                if (sigma_member(nu, c.xi) && theta_member(nu, c.xi)) return true;
                break;
        }
    }
    return false;
}

ObstructionReport omega_describe(const FgAbGroup& h, const FgAbGroup& a, const Arrangement& w) {
    for (const auto& c : w.components)
        if (c.xi.parent() != h) throw input_error("omega_describe: arrangement parent mismatch");
    ObstructionReport rep{h, a, ReportMode::arrangement_exact, {}, Int(1)};

    if (a.free_rank() == 1) {
        rep.mode = ReportMode::rank1_exact;
        rep.c = cyclic_exponent(a);
        for (const auto& [xi, eta] : xi_d_with_witness(w, rep.c))
            rep.constituents.push_back({xi, ConstituentKind::u_set, eta});
        return rep;
    }

    bool untranslated = true;
    for (const auto& c : w.components)
        if (order_on(c.eta, c.xi) != 1) untranslated = false;
    if (untranslated) {
        std::set<Subgroup> seen;
        for (const auto& c : w.components)
            if (seen.insert(c.xi).second)
                rep.constituents.push_back({c.xi, ConstituentKind::sigma_set, std::nullopt});
        std::sort(rep.constituents.begin(), rep.constituents.end(),
                  [](const ObstructionConstituent& x, const ObstructionConstituent& y) {
                      return x.xi < y.xi;
                  });
        return rep;
    }

    for (const auto& c : w.components)
        rep.c = lcm_int(rep.c, c.eta.order() * cyclic_exponent(determinant_group(c.xi)));
    for (const auto& [xi, eta] : xi_d_with_witness(w, rep.c))
        rep.constituents.push_back({xi, ConstituentKind::u_set, eta});
    return rep;
}

ObstructionReport omega_describe(const FgAbGroup& h, const FgAbGroup& a,
                                 const QuasiProjectiveV1& w) {
    for (const auto& xi : w.full)
        if (xi.parent() != h) throw input_error("omega_describe: parent mismatch");
    for (const auto& xi : w.deleted)
        if (xi.parent() != h) throw input_error("omega_describe: parent mismatch");
    ObstructionReport rep{h, a, ReportMode::arrangement_exact, {}, Int(1)};
    std::set<Subgroup> seen_full;
    for (const auto& xi : w.full)
        if (Subgroup s = subgroup_saturation(xi); seen_full.insert(s).second)
            rep.constituents.push_back({s, ConstituentKind::sigma_set, std::nullopt});
    std::set<Subgroup> seen_del;
    for (const auto& xi : w.deleted)
        if (seen_del.insert(xi).second)
            rep.constituents.push_back({xi, ConstituentKind::sigma_and_theta, std::nullopt});
    return rep;
}

ObstructionReport omega_describe(const FgAbGroup& h, const FgAbGroup& a,
                                 const LaurentPolynomial& f) {
    if (f.ambient() != h) throw input_error("omega_describe: hypersurface parent mismatch");
    ObstructionReport rep{h, a, ReportMode::upper_bound_only, {}, Int(1)};
    const std::size_t n = h.free_rank();
    std::set<Subgroup> seen;
    for (const Lattice& l : admissible_tau1(f)) {
        Subgroup xi = Subgroup::full(h);
        if (l.rank() > 0) {
            IntMatrix rows(l.rank(), n);
            for (std::size_t j = 0; j < l.rank(); ++j)
                for (std::size_t i = 0; i < n; ++i) rows.at(j, i) = l.generators().at(i, j);
            xi = Subgroup(h, kernel_basis(rows));
        }
        if (seen.insert(xi).second)
            rep.constituents.push_back({xi, ConstituentKind::u_set, std::nullopt});
    }
    std::sort(rep.constituents.begin(), rep.constituents.end(),
              [](const ObstructionConstituent& x, const ObstructionConstituent& y) {
                  return x.xi < y.xi;
              });
    return rep;
}

// ===================================================================
// singular-set probes and pullback diagnostics
// ===================================================================

namespace {

template <typename MemberFn>
SingularProbe probe_impl(const FgAbGroup& a, const Homomorphism& nu_bar, MemberFn member) {
    if (nu_bar.target() != FgAbGroup::free_group(a.free_rank()))
        throw input_error("singular_set_probe: nu_bar must target the free quotient");
    check_epi(nu_bar, "singular_set_probe");
    SingularProbe p;
    p.base_in_omega = member(nu_bar);
    p.members = fiber_representatives(nu_bar, a);
    p.fiber_size = p.members.size();
    for (const auto& nu : p.members) {
        bool in = member(nu);
        p.member_in_omega.push_back(in);
        if (in) ++p.in_omega_count;
    }
    return p;
}

}  // namespace

SingularProbe singular_set_probe(const Arrangement& w, const FgAbGroup& a,
                                 const Homomorphism& nu_bar) {
    return probe_impl(a, nu_bar, [&](const Homomorphism& nu) { return omega_member(nu, w); });
}

SingularProbe singular_set_probe(const QuasiProjectiveV1& w, const FgAbGroup& a,
                                 const Homomorphism& nu_bar) {
    return probe_impl(a, nu_bar, [&](const Homomorphism& nu) { return omega_member(nu, w); });
}

PullbackDiagnosis pullback_diagnostics(const Arrangement& w, const FgAbGroup& a) {
    std::vector<TranslatedSubgroup> mt = maximal_translated_tori(w);
    Int ta = a.torsion_order();
    std::vector<Int> orders;
    bool all_coprime = true;
    for (const auto& c : mt) {
        orders.push_back(order_on(c.eta, c.xi));
        if (gcd(orders.back(), ta) != 1) all_coprime = false;
    }
    if (all_coprime)
        return {PullbackVerdict::guaranteed_pullback,
                "every translation order on a maximal coset is coprime to the torsion order "
                "of the quotient, so the obstruction set is pulled back from the free quotient"};

    const FgAbGroup& h = mt.front().xi.parent();
    Int ca = cyclic_exponent(a);

    if (h.is_torsion_free() && mt.size() == 1) {
        const Int& dp = orders[0];
        if (dp >= 2 && ca % dp == 0 && a.free_rank() < h.free_rank())
            return {PullbackVerdict::guaranteed_strict,
                    "single translated coset whose translation order divides the cyclic "
                    "exponent of the quotient, with quotient rank below the ambient rank"};
    }

    bool all_translated = true;
    for (const Int& o : orders)
        if (o < 2) all_translated = false;
    if (all_translated) {
        for (std::size_t j = 0; j < mt.size(); ++j) {
            if (ca % orders[j] != 0) continue;
            Subgroup other = Subgroup::full(h);
            for (std::size_t l = 0; l < mt.size(); ++l)
                if (l != j) other = subgroup_intersection(other, mt[l].xi);
            if (mt[j].xi.contains(other)) continue;
            if (a.free_rank() < other.rank())
                return {PullbackVerdict::guaranteed_strict,
                        "all cosets are genuinely translated and one whose order divides the "
                        "cyclic exponent of the quotient is transverse to the product of the "
                        "others, whose codimension exceeds the quotient rank"};
        }
    }

    return {PullbackVerdict::inconclusive, "no decision criterion applies"};
}

}  // namespace df
