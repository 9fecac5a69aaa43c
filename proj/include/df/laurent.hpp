#pragma once

// Laurent polynomials on a finitely generated abelian group: the admissible
// partition computation of tau_1 for hypersurface zero loci, restriction of a
// polynomial to a torsion-translated subtorus (cyclotomic coefficients), the
// positive-dimensionality rule, plus Fox calculus: free-group words,
// presentations, Alexander matrices and their codimension-1 minor gcds.

#include "df/chargroup.hpp"
#include "df/cyclotomic.hpp"

#include <map>

namespace df {

class LaurentPolynomial {
public:
    explicit LaurentPolynomial(const FgAbGroup& ambient);
    static LaurentPolynomial from_integer_terms(
        const FgAbGroup& ambient,
        const std::vector<std::pair<std::vector<Int>, Int>>& terms);

    const FgAbGroup& ambient() const { return ambient_; }
    const std::map<std::vector<Int>, CyclotomicScalar>& terms() const { return terms_; }

    // accumulates, reduces torsion exponents, drops zero coefficients
    void add_term(std::vector<Int> exp, const CyclotomicScalar& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool integer_coefficients() const;
    CyclotomicScalar coefficient_sum() const;  // the value at the identity

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial& o) const;
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }
    std::string str() const;

private:
    FgAbGroup ambient_;
    std::map<std::vector<Int>, CyclotomicScalar> terms_;
};

// Maximal lattices L(p) over admissible partitions p of the support (every
// block sum zero); tau_1 of the hypersurface.  Integer coefficients and
// torsion-free ambient required; support size bounded.
std::vector<Lattice> admissible_tau1(const LaurentPolynomial& f);

// f restricted to the coset alpha * V(sat ker)): a Laurent polynomial in
// r = rank(H) - rank(ker) variables with cyclotomic coefficients; identically
// zero iff the coset lies inside the zero locus.
LaurentPolynomial restrict_to_coset(const LaurentPolynomial& f, const Subgroup& ker,
                                    const TorsionCharacter& alpha);

// Is the zero locus of a restricted polynomial positive-dimensional in its
// torus?  Exact rule: zero polynomial -> r >= 1; r <= 1 -> false; otherwise
// true iff there are at least two distinct monomials.
bool hypersurface_positive_dim(const LaurentPolynomial& g);

class GroupWord {
public:
    // letters: +-(i+1) for generator i, free reduction applied
    GroupWord(std::size_t alphabet, std::vector<long long> letters);
    // "x1 x2^-1 x3^2" style
    static GroupWord parse(std::size_t alphabet, const std::string& text);

    std::size_t alphabet() const { return q_; }
    const std::vector<long long>& letters() const { return letters_; }
    std::vector<Int> exponent_sums() const;
    std::string str() const;

private:
    std::size_t q_;
    std::vector<long long> letters_;
};

class Presentation {
public:
    Presentation(std::size_t generators, std::vector<GroupWord> relators);

    std::size_t generators() const { return q_; }
    const std::vector<GroupWord>& relators() const { return rel_; }
    const FgAbGroup& abelianization() const { return ab_; }
    // N x q matrix sending generator exponent vectors to preimage coordinates
    const IntMatrix& coordinate_map() const { return phi_; }

private:
    std::size_t q_;
    std::vector<GroupWord> rel_;
    FgAbGroup ab_;
    IntMatrix phi_;
};

// m x q matrix of abelianized Fox derivatives over Z[H].
std::vector<std::vector<LaurentPolynomial>> fox_alexander_matrix(const Presentation& p);

// gcd of the (q-1)x(q-1) minors, normalized (monomial units stripped, leading
// coefficient positive); zero when there are no such minors.
LaurentPolynomial minors_gcd(const std::vector<std::vector<LaurentPolynomial>>& alex,
                             const FgAbGroup& ambient);

}  // namespace df
