#pragma once

// Integer lattices inside Z^n, held by column generator matrices in a single
// canonical form: column-style Hermite normal form with zero columns dropped.
// All the usual sublattice calculus lives here (sum, intersection, saturation,
// membership, annihilators), built on HNF/SNF with transformation matrices.

#include "df/intmat.hpp"

#include <optional>

namespace df {

struct HnfResult {
    IntMatrix h;  // M * u = h, column-style Hermite form
    IntMatrix u;  // unimodular
};

struct SnfResult {
    IntMatrix d;  // u * M * v = d, diagonal, d1 | d2 | ..., all >= 0
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix v;  // unimodular, cols x cols
};

// Column-style HNF: pivot entries positive, pivot rows strictly increasing,
// entries in a pivot's row left of it reduced into [0, pivot), zero columns last.
HnfResult hermite_normal_form(const IntMatrix& m);

SnfResult smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel {x : M x = 0}, as columns; the basis is always
// saturated (it spans the full rational kernel intersected with Z^cols).
IntMatrix kernel_basis(const IntMatrix& m);

// Diagonal entries of the Smith form, padded with zeros up to min(rows, cols).
std::vector<Int> smith_invariants(const IntMatrix& m);

class Lattice {
public:
    // Zero lattice in ambient Z^n.
    explicit Lattice(std::size_t ambient_rank);
    // From arbitrary generators (columns); canonicalized on construction.
    Lattice(std::size_t ambient_rank, const IntMatrix& generators);

    static Lattice full(std::size_t n) { return Lattice(n, IntMatrix::identity(n)); }
    static Lattice span(std::size_t n, std::initializer_list<std::initializer_list<long long>> cols);

    std::size_t ambient_rank() const { return n_; }
    const IntMatrix& generators() const { return gen_; }  // n x rank, canonical
    std::size_t rank() const { return gen_.cols(); }
    bool is_zero() const { return gen_.cols() == 0; }

    bool operator==(const Lattice& o) const { return n_ == o.n_ && gen_ == o.gen_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }
    // Canonical total order (for deterministic output).
    bool operator<(const Lattice& o) const;

    bool contains(const std::vector<Int>& v) const;
    bool contains(const Lattice& o) const;

    // Coefficients c with generators * c = v, if v lies in the lattice.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& v) const;

    std::string str() const;

private:
    std::size_t n_;
    IntMatrix gen_;
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersection(const Lattice& a, const Lattice& b);
// Annihilator {y : y . g = 0 for all generators g}, in the same ambient Z^n.
Lattice annihilator(const Lattice& l);
// Primitive closure (saturation = annihilator of annihilator).
Lattice saturation(const Lattice& l);

}  // namespace df
