#pragma once

// Exact arithmetic with roots of unity: elements of Q[x]/Phi_m(x) tagged by
// the conductor m, with compatible embeddings along m | m'.  Used to carry
// coefficient values exp(2 pi i q), q rational, when Laurent polynomials are
// restricted to torsion-translated subtori.

#include "df/intmat.hpp"

#include <vector>

namespace df {

// Monic integer coefficients of the m-th cyclotomic polynomial, ascending.
std::vector<Int> cyclotomic_polynomial(long long m);

long long euler_phi(long long m);

class CyclotomicScalar {
public:
    CyclotomicScalar();                    // zero
    explicit CyclotomicScalar(const Rat& r);
    explicit CyclotomicScalar(long long v);

    // exp(2 pi i k/m); conductor minimized internally
    static CyclotomicScalar root_of_unity(long long m, long long k);
    // exp(2 pi i q) for rational q
    static CyclotomicScalar from_rational_angle(const Rat& q);

    long long conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational(Rat* out = nullptr) const;

    CyclotomicScalar lifted_to(long long m) const;  // m must be a multiple

    CyclotomicScalar operator+(const CyclotomicScalar& o) const;
    CyclotomicScalar operator-(const CyclotomicScalar& o) const;
    CyclotomicScalar operator-() const;
    CyclotomicScalar operator*(const CyclotomicScalar& o) const;
    CyclotomicScalar inverse() const;
    bool operator==(const CyclotomicScalar& o) const;
    bool operator!=(const CyclotomicScalar& o) const { return !(*this == o); }

    // multiplicative order when this is a root of unity, otherwise 0
    long long root_order() const;

    std::string str() const;

private:
    long long m_;
    std::vector<Rat> c_;  // size euler_phi(m_)
    void reduce_from_poly(std::vector<Rat> p);
};

}  // namespace df
