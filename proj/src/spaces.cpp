#include "df/spaces.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace df {
namespace {

Int gcd_int(Int a, Int b) {
    using std::swap;
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        a %= b;
        swap(a, b);
    }
    return a;
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int r = (a / g) * b;
    return r < 0 ? -r : r;
}

Int mod_norm(Int x, const Int& m) {
    x %= m;
    if (x < 0) x += m;
    return x;
}

// x with a*x == 1 mod m, for coprime inputs and m >= 1
Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = mod_norm(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw internal_error("mod_inverse: arguments not coprime");
    return mod_norm(old_s, m);
}

// smallest non-negative x with coeff*x == rhs mod modulus
Int solve_congruence(const Int& coeff, const Int& rhs, const Int& modulus) {
    if (modulus <= 0) throw internal_error("solve_congruence: bad modulus");
    Int g = gcd_int(coeff, modulus);
    if (g == 0) g = modulus;
    if (mod_norm(rhs, g) != 0) throw internal_error("solve_congruence: no solution");
    Int m = modulus / g;
    if (m == 1) return 0;
    return mod_norm((rhs / g) * mod_inverse(coeff / g, m), m);
}

bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

long long matrix_rank(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<long long>(Lattice(m.rows(), m).rank());
}

std::vector<std::uint32_t> maximal_masks(std::vector<std::uint32_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (i != j && (masks[i] & masks[j]) == masks[i] && masks[i] != masks[j])
                dominated = true;
        if (!dominated) out.push_back(masks[i]);
    }
    return out;
}

SimplicialComplex from_masks(std::size_t n, const std::vector<std::uint32_t>& masks) {
    std::vector<std::vector<int>> facets;
    for (std::uint32_t m : masks) {
        std::vector<int> f;
        for (std::size_t v = 0; v < n; ++v)
            if (m >> v & 1u) f.push_back(static_cast<int>(v));
        facets.push_back(f);
    }
    return SimplicialComplex(n, facets);
}

}  // namespace

// ==== simplicial complexes ====

SimplicialComplex::SimplicialComplex(std::size_t vertices,
                                     const std::vector<std::vector<int>>& facets)
    : n_(vertices) {
    if (n_ > 32) throw input_error("SimplicialComplex: more than 32 vertices");
    std::vector<std::uint32_t> masks;
    for (const auto& f : facets) {
        std::uint32_t m = 0;
        for (int v : f) {
            if (v < 0 || static_cast<std::size_t>(v) >= n_)
                throw input_error("SimplicialComplex: vertex out of range");
            m |= 1u << v;
        }
        masks.push_back(m);
    }
    facets_ = maximal_masks(masks);
}

bool SimplicialComplex::has_face(std::uint32_t face) const {
    if (face == 0) return true;
    for (std::uint32_t f : facets_)
        if ((face & f) == face) return true;
    return false;
}

std::vector<std::uint32_t> SimplicialComplex::faces() const {
    std::set<std::uint32_t> out{0u};
    for (std::uint32_t f : facets_) {
        std::uint32_t s = f;
        while (true) {
            out.insert(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    return std::vector<std::uint32_t>(out.begin(), out.end());
}

SimplicialComplex SimplicialComplex::induced(std::uint32_t keep) const {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t f : facets_) masks.push_back(f & keep);
    return from_masks(n_, maximal_masks(masks));
}

SimplicialComplex SimplicialComplex::link(std::uint32_t face) const {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t f : facets_)
        if ((face & f) == face) masks.push_back(f & ~face);
    return from_masks(n_, maximal_masks(masks));
}

long long reduced_homology_rank(const SimplicialComplex& k, long long j) {
    if (j < -1) return 0;
    const auto all = k.faces();
    std::vector<std::vector<std::uint32_t>> by_size(k.vertex_count() + 2);
    for (std::uint32_t f : all) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    // chain dimension in degree t; degree -1 is the augmentation line
    auto dim_c = [&](long long t) -> long long {
        if (t == -1) return 1;
        if (t < -1 || t + 1 >= static_cast<long long>(by_size.size())) return 0;
        return static_cast<long long>(by_size[static_cast<std::size_t>(t + 1)].size());
    };
    // rank of the boundary map out of degree t
    auto boundary_rank = [&](long long t) -> long long {
        if (t < 0 || dim_c(t) == 0 || dim_c(t - 1) == 0) return 0;
        const auto& dom = by_size[static_cast<std::size_t>(t + 1)];
        const auto& cod = by_size[static_cast<std::size_t>(t)];
        IntMatrix m(cod.size(), dom.size());
        for (std::size_t col = 0; col < dom.size(); ++col) {
            std::uint32_t f = dom[col];
            int sign = 1;
            for (std::size_t v = 0; v < k.vertex_count(); ++v) {
                if (!(f >> v & 1u)) continue;
                std::uint32_t sub = f ^ (1u << v);
                auto it = std::lower_bound(cod.begin(), cod.end(), sub);
                if (it == cod.end() || *it != sub)
                    throw internal_error("reduced_homology_rank: face closure broken");
                m.at(static_cast<std::size_t>(it - cod.begin()), col) = sign;
                sign = -sign;
            }
        }
        return matrix_rank(m);
    };

    return dim_c(j) - boundary_rank(j) - boundary_rank(j + 1);
}

// ==== toric complexes ====

Arrangement toric_char_variety(const SimplicialComplex& l, long long i,
                               std::size_t vertex_bound) {
    const std::size_t n = l.vertex_count();
    if (n > vertex_bound) throw bound_error("toric_char_variety: vertex count exceeds bound");
    if (i < 0) throw input_error("toric_char_variety: negative degree");
    for (std::size_t v = 0; v < n; ++v)
        if (!l.has_face(1u << v))
            throw input_error("toric_char_variety: every vertex must be a face");

    const FgAbGroup h = FgAbGroup::free_group(n);
    const std::uint32_t full = n == 32 ? 0xffffffffu : (1u << n) - 1u;
    const auto all_faces = l.faces();

    // reduced homology ranks in degrees -1 .. i-1, memoized by facet list
    std::map<std::vector<std::uint32_t>, std::vector<long long>> memo;
    auto ranks_of = [&](const SimplicialComplex& c) -> const std::vector<long long>& {
        auto [it, fresh] = memo.try_emplace(c.facet_masks());
        if (fresh)
            for (long long d = -1; d < i; ++d)
                it->second.push_back(reduced_homology_rank(c, d));
        return it->second;
    };

    Arrangement out;
    // the empty subset only ever yields the identity character, which spans
    // no positive-dimensional piece
    for (std::uint32_t w = full; w != 0; --w) {
        bool contributes = false;
        for (std::uint32_t sigma : all_faces) {
            if (sigma & w) continue;
            long long dmax = i - 1 - std::popcount(sigma);
            if (dmax < -1) continue;
            const auto& ranks = ranks_of(l.link(sigma).induced(w));
            for (long long d = -1; d <= dmax && !contributes; ++d)
                if (ranks[static_cast<std::size_t>(d + 1)] != 0) contributes = true;
            if (contributes) break;
        }
        if (!contributes) continue;
        std::vector<std::size_t> outside;
        for (std::size_t v = 0; v < n; ++v)
            if (!(w >> v & 1u)) outside.push_back(v);
        IntMatrix gens(n, outside.size());
        for (std::size_t j = 0; j < outside.size(); ++j) gens.at(outside[j], j) = 1;
        out.components.push_back(v_of(Subgroup(h, gens)));
    }
    std::sort(out.components.begin(), out.components.end());
    return out;
}

ObstructionReport toric_omega(const SimplicialComplex& l, long long i, const FgAbGroup& a,
                              std::size_t vertex_bound) {
    Arrangement w = toric_char_variety(l, i, vertex_bound);
    return omega_describe(FgAbGroup::free_group(l.vertex_count()), a, w);
}

// ==== Brieskorn manifolds ====

BrieskornInvariants brieskorn_invariants(const std::vector<Int>& exponents,
                                         const std::vector<Int>& torsion_factors) {
    if (exponents.empty()) throw input_error("brieskorn_invariants: empty exponent list");
    for (const Int& e : exponents)
        if (e < 2) throw input_error("brieskorn_invariants: exponents must be at least 2");
    const std::size_t n = exponents.size();

    Int l = 1, a = 1;
    for (const Int& e : exponents) {
        l = lcm_int(l, e);
        a *= e;
    }

    std::vector<Int> alpha(n), beta(n), s(n);
    Rat sum_s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Int lj = 1;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) lj = lcm_int(lj, exponents[k]);
        if (l % lj != 0) throw internal_error("brieskorn_invariants: lcm identity broken");
        alpha[j] = l / lj;
        if (a % (exponents[j] * lj) != 0)
            throw internal_error("brieskorn_invariants: repetition count not integral");
        s[j] = a / (exponents[j] * lj);
        beta[j] = solve_congruence(l, exponents[j], alpha[j]);
        sum_s += Rat(s[j]);
    }

    Rat genus = (Rat(2) + Rat(Int(n) - 2) * Rat(a, l) - sum_s) / 2;
    if (!rat_is_integer(genus) || genus < 0)
        throw internal_error("brieskorn_invariants: genus formula not a non-negative integer");
    Int g = numerator(genus);
    if (g > 1000) throw bound_error("brieskorn_invariants: genus too large");

    Rat euler = -Rat(a, l * l);

    Int alpha_power = 1;
    Int alpha_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
        unsigned long long reps = s[j].convert_to<unsigned long long>();
        if (reps > 4096) throw bound_error("brieskorn_invariants: repetition count too large");
        for (unsigned long long k = 0; k < reps; ++k) alpha_power *= alpha[j];
        alpha_lcm = lcm_int(alpha_lcm, alpha[j]);
    }
    Rat tors = Rat(alpha_power) * (-euler);
    if (!rat_is_integer(tors) || tors <= 0)
        throw internal_error("brieskorn_invariants: torsion order not a positive integer");
    if (alpha_power % alpha_lcm != 0)
        throw internal_error("brieskorn_invariants: component count not integral");

    BrieskornInvariants out{SeifertData{}, FgAbGroup::free_group(0), numerator(tors),
                            alpha_power / alpha_lcm};
    out.seifert.genus = g;
    out.seifert.euler = euler;
    for (std::size_t j = 0; j < n; ++j)
        if (alpha[j] != 1) out.seifert.orbits.push_back({alpha[j], beta[j], s[j]});

    const std::size_t rank2g = 2 * g.convert_to<std::size_t>();
    if (torsion_factors.empty()) {
        out.h = FgAbGroup::free_group(rank2g);
    } else {
        Int prod = 1;
        for (const Int& d : torsion_factors) {
            if (d < 2) throw input_error("brieskorn_invariants: torsion factors must be at least 2");
            prod *= d;
        }
        if (prod != out.torsion_order)
            throw input_error("brieskorn_invariants: supplied torsion does not match the computed order");
        out.h = FgAbGroup::from_invariants(rank2g, torsion_factors);
    }
    return out;
}

Arrangement brieskorn_v1(const BrieskornInvariants& inv,
                         const std::vector<std::vector<Int>>& h_elements) {
    const Int g = inv.seifert.genus;
    if (g == 0) throw input_error("brieskorn_v1: genus-zero fibrations are unsupported");
    if (inv.alpha > 10000) throw bound_error("brieskorn_v1: too many translated components");
    const long long copies = (inv.alpha - 1).convert_to<long long>();

    const FgAbGroup& h = inv.h;
    const std::size_t free_n = h.free_rank();
    const std::size_t tors_n = h.torsion_count();
    if (copies > 0 && tors_n == 0)
        throw input_error("brieskorn_v1: torsion structure required for translated components");

    std::vector<std::vector<Int>> elems = h_elements;
    if (elems.empty() && copies == 1 && tors_n == 1 && h.torsion_factors()[0] % 2 == 0)
        elems.push_back({h.torsion_factors()[0] / 2});
    if (static_cast<long long>(elems.size()) != copies)
        throw input_error("brieskorn_v1: expected one torsion element per translated component");

    std::set<std::vector<Int>> seen;
    std::vector<TorsionCharacter> chars;
    for (auto e : elems) {
        if (e.size() != tors_n)
            throw input_error("brieskorn_v1: torsion element has wrong length");
        bool zero = true;
        for (std::size_t i = 0; i < tors_n; ++i) {
            e[i] = mod_norm(e[i], h.torsion_factors()[i]);
            if (e[i] != 0) zero = false;
        }
        if (zero) throw input_error("brieskorn_v1: translated components must be genuinely translated");
        if (!seen.insert(e).second)
            throw input_error("brieskorn_v1: torsion elements must be distinct");
        std::vector<Rat> vals(free_n, Rat(0));
        for (std::size_t i = 0; i < tors_n; ++i)
            vals.emplace_back(e[i], h.torsion_factors()[i]);
        chars.emplace_back(h, vals);
    }

    IntMatrix tg(h.preimage_rank(), tors_n);
    for (std::size_t i = 0; i < tors_n; ++i) tg.at(free_n + i, i) = 1;
    Subgroup tors_span(h, tg);

    Arrangement w;
    w.points.push_back(TorsionCharacter::trivial(h));
    if (g > 1) w.components.push_back(v_of(tors_span));
    for (const auto& c : chars) w.components.emplace_back(tors_span, c);
    return w;
}

ObstructionReport brieskorn_omega(const BrieskornInvariants& inv, const FgAbGroup& a,
                                  const std::vector<std::vector<Int>>& h_elements) {
    return omega_describe(inv.h, a, brieskorn_v1(inv, h_elements));
}

}  // namespace df
