#include "df/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace df {

namespace {

constexpr long long kConductorBound = 1000000;

// exact division of integer polynomials, divisor monic; ascending coeffs
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() != 1) throw internal_error("poly_div_exact: divisor not monic");
    if (num.size() < den.size()) throw internal_error("poly_div_exact: degree underflow");
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Int& x : num)
        if (x != 0) throw internal_error("poly_div_exact: nonzero remainder");
    return q;
}

std::vector<Rat> poly_mod(std::vector<Rat> p, const std::vector<Int>& mod) {
    const std::size_t deg = mod.size() - 1;  // mod is monic of this degree
    while (p.size() > deg) {
        Rat c = p.back();
        std::size_t off = p.size() - 1 - deg;
        if (c != 0)
            for (std::size_t j = 0; j < mod.size(); ++j) p[off + j] -= c * Rat(mod[j]);
        p.pop_back();
    }
    p.resize(deg, Rat(0));
    return p;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

std::vector<Int> cyclotomic_polynomial(long long m) {
    if (m < 1) throw input_error("cyclotomic_polynomial: m must be positive");
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;  // x^m - 1
    for (long long d = 1; d < m; ++d)
        if (m % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

long long euler_phi(long long m) {
    long long r = m;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    if (m > 1) r -= r / m;
    return r;
}

CyclotomicScalar::CyclotomicScalar() : m_(1), c_(1, Rat(0)) {}
CyclotomicScalar::CyclotomicScalar(const Rat& r) : m_(1), c_(1, r) {}
CyclotomicScalar::CyclotomicScalar(long long v) : m_(1), c_(1, Rat(v)) {}

void CyclotomicScalar::reduce_from_poly(std::vector<Rat> p) {
    c_ = poly_mod(std::move(p), cyclotomic_polynomial(m_));
}

CyclotomicScalar CyclotomicScalar::root_of_unity(long long m, long long k) {
    if (m < 1) throw input_error("root_of_unity: m must be positive");
    k %= m;
    if (k < 0) k += m;
    long long g = std::gcd(k == 0 ? m : k, m);
    long long mm = m / g, kk = k / g;  // minimal conductor
    CyclotomicScalar out;
    out.m_ = mm;
    std::vector<Rat> p(kk + 1, Rat(0));
    p[kk] = 1;
    out.reduce_from_poly(std::move(p));
    return out;
}

CyclotomicScalar CyclotomicScalar::from_rational_angle(const Rat& q) {
    Int den = Int(boost::multiprecision::denominator(q));
    Int num = Int(boost::multiprecision::numerator(q));
    if (den > kConductorBound) throw bound_error("root of unity order too large");
    Int nmod = num % den;
    if (nmod < 0) nmod += den;
    return root_of_unity(den.convert_to<long long>(), nmod.convert_to<long long>());
}

bool CyclotomicScalar::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CyclotomicScalar::is_rational(Rat* out) const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    if (out) *out = c_[0];
    return true;
}

CyclotomicScalar CyclotomicScalar::lifted_to(long long m) const {
    if (m % m_ != 0) throw input_error("lifted_to: not a multiple of the conductor");
    if (m == m_) return *this;
    if (m > kConductorBound) throw bound_error("conductor too large");
    long long step = m / m_;
    std::vector<Rat> p((c_.size() - 1) * step + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    CyclotomicScalar out;
    out.m_ = m;
    out.reduce_from_poly(std::move(p));
    return out;
}

CyclotomicScalar CyclotomicScalar::operator+(const CyclotomicScalar& o) const {
    long long m = lcm_ll(m_, o.m_);
    CyclotomicScalar a = lifted_to(m), b = o.lifted_to(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CyclotomicScalar CyclotomicScalar::operator-(const CyclotomicScalar& o) const {
    return *this + (-o);
}

CyclotomicScalar CyclotomicScalar::operator-() const {
    CyclotomicScalar a = *this;
    for (Rat& x : a.c_) x = -x;
    return a;
}

CyclotomicScalar CyclotomicScalar::operator*(const CyclotomicScalar& o) const {
    long long m = lcm_ll(m_, o.m_);
    CyclotomicScalar a = lifted_to(m), b = o.lifted_to(m);
    std::vector<Rat> p(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    }
    CyclotomicScalar out;
    out.m_ = m;
    out.reduce_from_poly(std::move(p));
    return out;
}

CyclotomicScalar CyclotomicScalar::inverse() const {
    if (is_zero()) throw input_error("inverse of zero");
    // extended euclid in Q[x] against Phi_m
    auto phi = cyclotomic_polynomial(m_);
    std::vector<Rat> r0(phi.begin(), phi.end()), r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients on c_
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    while (true) {
        trim(r1);
        if (r1.empty()) throw internal_error("inverse: element not invertible");
        if (r1.size() == 1) break;
        // r0 = q r1 + r2
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        std::vector<Rat> r2 = r0;
        for (std::size_t i = q.size(); i-- > 0;) {
            Rat c = r2[i + r1.size() - 1] / r1.back();
            q[i] = c;
            if (c != 0)
                for (std::size_t j = 0; j < r1.size(); ++j) r2[i + j] -= c * r1[j];
        }
        r2.resize(r1.size() - 1);
        trim(r2);
        // s2 = s0 - q s1
        std::vector<Rat> s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size()), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rat unit = r1[0];
    for (Rat& x : s1) x /= unit;
    CyclotomicScalar out;
    out.m_ = m_;
    out.reduce_from_poly(std::move(s1));
    return out;
}

bool CyclotomicScalar::operator==(const CyclotomicScalar& o) const {
    long long m = lcm_ll(m_, o.m_);
    return lifted_to(m).c_ == o.lifted_to(m).c_;
}

long long CyclotomicScalar::root_order() const {
    long long cap = lcm_ll(2, m_);  // roots of unity here are +/- powers of zeta_m
    CyclotomicScalar one{Rat(1)};
    for (long long d = 1; d <= cap; ++d) {
        if (cap % d != 0) continue;
        CyclotomicScalar acc{Rat(1)};
        for (long long i = 0; i < d; ++i) acc = acc * (*this);
        if (acc == one) return d;
    }
    return 0;
}

std::string CyclotomicScalar::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << " | zeta_" << m_ << "]";
    return os.str();
}

}  // namespace df
