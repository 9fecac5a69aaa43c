#pragma once

// The dual side of a finitely generated abelian group H: torsion characters
// (Q/Z-valued, stored additively), torsion-translated algebraic subgroups
// eta V(xi) of the character torus, and their calculus: intersection,
// containment, identity-component decomposition, kernels, duals.

#include "df/abelian.hpp"

namespace df {

class TorsionCharacter {
public:
    // one value per preimage coordinate, reduced mod 1; must vanish on the
    // relation lattice of the parent
    TorsionCharacter(const FgAbGroup& parent, std::vector<Rat> values);
    static TorsionCharacter trivial(const FgAbGroup& parent);

    const FgAbGroup& parent() const { return parent_; }
    const std::vector<Rat>& values() const { return v_; }

    bool is_trivial() const;
    Int order() const;  // lcm of value denominators
    Rat evaluate(const std::vector<Int>& x) const;  // in [0,1)

    TorsionCharacter operator+(const TorsionCharacter& o) const;
    TorsionCharacter operator-(const TorsionCharacter& o) const;
    TorsionCharacter operator-() const;
    bool operator==(const TorsionCharacter& o) const { return parent_ == o.parent_ && v_ == o.v_; }
    bool operator!=(const TorsionCharacter& o) const { return !(*this == o); }
    bool operator<(const TorsionCharacter& o) const;
    std::string str() const;

private:
    FgAbGroup parent_;
    std::vector<Rat> v_;
};

// {x in H : eta(x) = 0 mod 1}; finite index equal to the order of eta.
Subgroup character_kernel(const TorsionCharacter& eta);

// eta . nu, a character of the source of nu.
TorsionCharacter compose_character(const TorsionCharacter& eta, const Homomorphism& nu);

// Order of the restriction of eta to the subgroup xi.
Int order_on(const TorsionCharacter& eta, const Subgroup& xi);

// The coset eta * V(xi) inside the character torus of the parent of xi.
struct TranslatedSubgroup {
    Subgroup xi;
    TorsionCharacter eta;

    TranslatedSubgroup(Subgroup x, TorsionCharacter e);
    long long dim() const;        // rank H - rank xi
    Int component_count() const;  // |Tors(H/xi)|

    bool operator==(const TranslatedSubgroup& o) const { return xi == o.xi && eta == o.eta; }
    bool operator!=(const TranslatedSubgroup& o) const { return !(*this == o); }
    bool operator<(const TranslatedSubgroup& o) const;
    std::string str() const;
};

TranslatedSubgroup v_of(const Subgroup& xi);

// epsilon(<beta> V(chi)) = chi intersect ker(beta).
Subgroup epsilon_of_cyclic_extension(const Subgroup& chi, const TorsionCharacter& beta);

struct CosetMeet {
    bool nonempty;
    long long dim;  // -1 when empty
};
CosetMeet coset_intersection(const TranslatedSubgroup& c1, const TranslatedSubgroup& c2);

// c1 subset of c2; both xi fields must be saturated.
bool coset_containment(const TranslatedSubgroup& c1, const TranslatedSubgroup& c2);

// Decompose eta V(xi) into |det group| cosets of the identity-component
// subtorus V(sat xi); bounded brute force over the determinant group dual.
std::vector<TranslatedSubgroup> components_of(const TranslatedSubgroup& c);

// All characters of a finite group (values c_j/d_j on its generators).
std::vector<TorsionCharacter> all_dual_characters(const FgAbGroup& t);

// A finite union of torsion-translated subgroups plus isolated torsion points.
struct Arrangement {
    std::vector<TranslatedSubgroup> components;
    std::vector<TorsionCharacter> points;
};

}  // namespace df
