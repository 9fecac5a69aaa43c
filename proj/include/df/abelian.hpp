#pragma once

// Finitely generated abelian groups under a fixed coordinate convention:
// H = Z^n (+) Z_{d_1} (+) ... (+) Z_{d_k} with d_1 | ... | d_k, realized as
// Z^N / R for N = n + k and relation lattice R = span{d_i e_{n+i}}.  Subgroups
// are preimage lattices containing R; homomorphisms are integer matrices on
// preimage coordinates mapping relations into relations.  On top of that:
// quotient/determinant-group invariants, the closed-form count of Epi(H,A)
// modulo Aut(A), brute-force enumeration for finite groups, fiber
// representatives over a free quotient, and the equivalence test for
// epimorphism classes.

#include "df/lattice.hpp"

#include <vector>

namespace df {

class FgAbGroup {
public:
    FgAbGroup(std::size_t free_rank, std::vector<Int> torsion_factors);
    static FgAbGroup free_group(std::size_t n) { return FgAbGroup(n, {}); }
    // Normalizes an arbitrary factor list (drops 1s, refactors into a
    // divisibility chain); the strict constructor instead rejects non-chains.
    static FgAbGroup from_invariants(std::size_t free_rank, const std::vector<Int>& factors);

    std::size_t free_rank() const { return n_; }
    const std::vector<Int>& torsion_factors() const { return tors_; }
    std::size_t torsion_count() const { return tors_.size(); }
    std::size_t preimage_rank() const { return n_ + tors_.size(); }

    bool is_torsion_free() const { return tors_.empty(); }
    bool is_finite() const { return n_ == 0; }
    bool is_trivial() const { return n_ == 0 && tors_.empty(); }
    Int torsion_order() const;
    Int order() const;  // finite groups only

    // Generators of R as columns of an N x k matrix, and R itself.
    IntMatrix relation_generators() const;
    Lattice relation_lattice() const;

    bool operator==(const FgAbGroup& o) const { return n_ == o.n_ && tors_ == o.tors_; }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }
    std::string str() const;

private:
    std::size_t n_;
    std::vector<Int> tors_;
};

// Largest order of an element: top invariant factor, or 1 when torsion-free.
Int cyclic_exponent(const FgAbGroup& a);

class Subgroup {
public:
    // Subgroup generated by the given preimage-coordinate columns (R is
    // always added, so the preimage lattice contains the relations).
    Subgroup(const FgAbGroup& parent, const IntMatrix& generators);
    static Subgroup zero(const FgAbGroup& parent);
    static Subgroup full(const FgAbGroup& parent);
    static Subgroup from_preimage(const FgAbGroup& parent, const Lattice& preimage);

    const FgAbGroup& parent() const { return parent_; }
    const Lattice& preimage() const { return pre_; }
    // Free rank of the subgroup as an abstract group.
    std::size_t rank() const { return pre_.rank() - parent_.torsion_count(); }

    bool contains(const Subgroup& o) const;
    bool contains_element(const std::vector<Int>& x) const;

    bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && pre_ == o.pre_; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
    bool operator<(const Subgroup& o) const;
    std::string str() const;

private:
    FgAbGroup parent_;
    Lattice pre_;
};

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);
// Primitive closure inside the parent group.
Subgroup subgroup_saturation(const Subgroup& s);

// Invariants of parent/xi as an abstract group.
FgAbGroup quotient_invariants(const Subgroup& xi);
// Invariants of sat(xi)/xi; trivial iff xi is primitive.
FgAbGroup determinant_group(const Subgroup& xi);

class Homomorphism {
public:
    // matrix: (target preimage rank) x (source preimage rank); must map
    // source relations into target relations.
    Homomorphism(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& matrix);

    const FgAbGroup& source() const { return src_; }
    const FgAbGroup& target() const { return tgt_; }
    const IntMatrix& matrix() const { return m_; }

    bool is_epi() const;
    Subgroup kernel() const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // torsion coords reduced
    Homomorphism compose(const Homomorphism& inner) const;    // (*this) after inner

    std::string str() const;

private:
    FgAbGroup src_, tgt_;
    IntMatrix m_;
};

// True iff some epimorphism H -> A exists.
bool is_quotient_of(const FgAbGroup& a, const FgAbGroup& h);

// |Epi(H,A)/Aut(A)| by the closed product formula over primes dividing
// |Tors(A)|, computed for the reduced pair (H modulo a free complement of
// rank(A), Tors(A)).  Returns 0 when A is not a quotient of H.
Int gamma_count(const FgAbGroup& h, const FgAbGroup& a);

// Brute force for finite groups: all automorphisms of a finite group as
// generator-image matrices (k x k, row j reduced mod d_j).
std::vector<IntMatrix> automorphisms(const FgAbGroup& t);

// One representative per Aut(A)-orbit of Epi(G, A); finite G and A only.
std::vector<Homomorphism> enumerate_epis_mod_aut(const FgAbGroup& g, const FgAbGroup& a);

// Representatives of the fiber of Gamma(H,A) -> Gamma(H, A/Tors A) over the
// class of nu_bar; one per orbit, pairwise inequivalent, each restricting to
// nu_bar on free coordinates.
std::vector<Homomorphism> fiber_representatives(const Homomorphism& nu_bar, const FgAbGroup& a);

// Compose with the projection onto the free part of the target.
Homomorphism free_part(const Homomorphism& nu);

// Class equality in Gamma(H,A): exists alpha in Aut(A) with alpha . nu1 = nu2.
bool equivalent_epis(const Homomorphism& nu1, const Homomorphism& nu2);

}  // namespace df
