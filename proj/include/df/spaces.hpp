#pragma once

// Characteristic-variety generators for two concrete families of spaces:
// toric complexes attached to simplicial complexes, and Brieskorn manifolds
// attached to exponent tuples, together with their quotient-finiteness
// pipelines built on the arrangement machinery.

#include "df/jumploci.hpp"

#include <cstdint>
#include <vector>

namespace df {

// ==== simplicial complexes ====

// Faces are vertex subsets encoded as bitmasks over a fixed ambient vertex
// set {0, ..., n-1}; only the facets are stored and closures are computed on
// demand.  The empty simplex counts as a face of every complex, and a
// complex without vertices is "empty" for reduced-homology purposes.
class SimplicialComplex {
public:
    SimplicialComplex(std::size_t vertices, const std::vector<std::vector<int>>& facets);

    std::size_t vertex_count() const { return n_; }
    // Inclusion-maximal faces as sorted bitmasks.
    const std::vector<std::uint32_t>& facet_masks() const { return facets_; }

    bool has_face(std::uint32_t face) const;
    // Every face including the empty one, as sorted bitmasks.
    std::vector<std::uint32_t> faces() const;
    // Subcomplex induced on the vertices of the given mask; ambient vertex
    // numbering is kept.
    SimplicialComplex induced(std::uint32_t keep) const;
    // Link of a face: all faces disjoint from it whose union with it is
    // again a face.
    SimplicialComplex link(std::uint32_t face) const;

private:
    std::size_t n_;
    std::vector<std::uint32_t> facets_;
};

// Rank over the rationals of reduced simplicial homology in degree j, from
// exact integer boundary ranks.  Degree -1 has rank 1 exactly when the
// complex has no vertices.
long long reduced_homology_rank(const SimplicialComplex& k, long long j);

// ==== toric complexes ====

// Degree-i characteristic variety of the toric complex attached to l, as an
// untranslated arrangement inside the character torus of Z^n: one coordinate
// subtorus per vertex subset passing the link-homology test.
Arrangement toric_char_variety(const SimplicialComplex& l, long long i,
                               std::size_t vertex_bound = 16);

// Closed-form description of the finiteness set of the toric complex over
// the quotient a; always an exact mode.
ObstructionReport toric_omega(const SimplicialComplex& l, long long i, const FgAbGroup& a,
                              std::size_t vertex_bound = 16);

// ==== Brieskorn manifolds ====

struct SeifertOrbit {
    Int alpha;  // multiplicity
    Int beta;
    Int s;      // repetition count
};

struct SeifertData {
    std::vector<SeifertOrbit> orbits;  // multiplicity-one entries removed
    Int genus = 0;
    Rat euler;
};

// First homology data of the Brieskorn manifold with the given exponents.
// Only the order of the torsion subgroup is derived; its structure must be
// supplied by the caller when known, and h then carries it.
struct BrieskornInvariants {
    SeifertData seifert;
    FgAbGroup h;        // Z^{2g} plus the supplied torsion factors
    Int torsion_order;  // order of the torsion subgroup of first homology
    Int alpha;          // one more than the number of translated components
};

BrieskornInvariants brieskorn_invariants(const std::vector<Int>& exponents,
                                         const std::vector<Int>& torsion_factors = {});

// Positive-dimensional part of the degree-one characteristic variety, plus
// the identity point: alpha - 1 translated copies of the identity component,
// indexed by torsion elements of h (coordinates in h's torsion factors), and
// for genus > 1 additionally the untranslated identity component.  With no
// elements supplied, the single translated copy of a group with one even
// cyclic torsion factor defaults to its order-two element.
Arrangement brieskorn_v1(const BrieskornInvariants& inv,
                         const std::vector<std::vector<Int>>& h_elements = {});

// Closed-form description of the finiteness set over the quotient a.
ObstructionReport brieskorn_omega(const BrieskornInvariants& inv, const FgAbGroup& a,
                                  const std::vector<std::vector<Int>>& h_elements = {});

}  // namespace df
