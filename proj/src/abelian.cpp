#include "df/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace df {

namespace {

constexpr long long kAutBound = 512;        // |A| cap for brute-force orbit work
constexpr long long kWorkBound = 20000000;  // enumeration guard

void check_chain(const std::vector<Int>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 2) throw input_error("torsion factors must be >= 2");
        if (i > 0 && t[i] % t[i - 1] != 0)
            throw input_error("torsion factors must form a divisibility chain");
    }
}

std::map<Int, int> factorize(Int x) {
    std::map<Int, int> out;
    for (Int p = 2; p * p <= x; ++p)
        while (x % p == 0) { ++out[p]; x /= p; }
    if (x > 1) ++out[x];
    return out;
}

Int int_pow(const Int& base, const Int& e) {
    if (e < 0) throw internal_error("int_pow: negative exponent");
    Int r = 1, b = base, k = e;
    while (k > 0) {
        if (k % 2 == 1) r *= b;
        b *= b;
        k /= 2;
    }
    return r;
}

Int num_of(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
Int den_of(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

// exponents of p in the factor list, positive ones, decreasing
std::vector<Int> p_partition(const std::vector<Int>& factors, const Int& p) {
    std::vector<Int> out;
    for (const Int& d : factors) {
        Int e = 0, x = d;
        while (x % p == 0) { ++e; x /= p; }
        if (e > 0) out.push_back(e);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

Int theta_i(const Int& part, const std::vector<Int>& tau) {
    Int s = 0;
    for (const Int& t : tau) s += std::min(part, t);
    return s;
}

// one prime's factor of the closed-form count, for the reduced pair
// (Z^m (+) torsion tors_h, torsion tors_a)
Rat gamma_prime_factor(const Int& m, const std::vector<Int>& tors_h,
                       const std::vector<Int>& tors_a, const Int& p) {
    std::vector<Int> lam = p_partition(tors_a, p);
    std::vector<Int> tau = p_partition(tors_h, p);
    const std::size_t l = lam.size();
    Int size_lam = 0, weight = 0;
    for (std::size_t i = 0; i < l; ++i) {
        size_lam += lam[i];
        weight += Int(i) * lam[i];
    }
    Int theta_minus = 0;
    for (std::size_t i = 0; i < l; ++i) theta_minus += theta_i(lam[i] - 1, tau);

    Rat num = Rat(int_pow(p, (size_lam - Int(l)) * m + theta_minus));
    for (std::size_t i = 0; i < l; ++i) {
        Int e = m + theta_i(lam[i], tau) - theta_i(lam[i] - 1, tau);
        num *= Rat(int_pow(p, e) - int_pow(p, Int(i)));
    }
    Rat den = Rat(int_pow(p, size_lam + 2 * weight));
    std::map<Int, int> mult;
    for (const Int& x : lam) ++mult[x];
    for (const auto& [k, mk] : mult) {
        (void)k;
        for (int i = 1; i <= mk; ++i) den *= (Rat(1) - Rat(1, int_pow(p, Int(i))));
    }
    return num / den;
}

// all elements of a finite group, lexicographic, coordinates reduced
std::vector<std::vector<Int>> all_elements(const FgAbGroup& t) {
    if (!t.is_finite()) throw input_error("element enumeration needs a finite group");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(t.torsion_count(), Int(0));
    while (true) {
        out.push_back(cur);
        std::size_t i = t.torsion_count();
        while (i > 0) {
            --i;
            if (++cur[i] < t.torsion_factors()[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (t.torsion_count() == 0) return out;
    }
}

// do the columns of m, together with the relations, generate all of tgt?
bool cols_generate(const IntMatrix& m, const FgAbGroup& tgt) {
    IntMatrix full = m.hstack(tgt.relation_generators());
    auto inv = smith_invariants(full);
    std::size_t rank = 0;
    for (const Int& d : inv)
        if (d != 0) ++rank;
    if (rank != tgt.preimage_rank()) return false;
    for (const Int& d : inv)
        if (d != 0 && d != 1) return false;
    return true;
}

void reduce_torsion_rows(IntMatrix& m, const FgAbGroup& tgt) {
    for (std::size_t j = tgt.free_rank(); j < tgt.preimage_rank(); ++j) {
        const Int& d = tgt.torsion_factors()[j - tgt.free_rank()];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Int v = m.at(j, c) % d;
            if (v < 0) v += d;
            m.at(j, c) = v;
        }
    }
}

std::string key_of(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) os << m.at(i, j).str() << ",";
    return os.str();
}

// orbit representatives of surjections (source generators with the given
// orders, 0 meaning infinite) onto the finite group t, modulo Aut(t)
std::vector<IntMatrix> epi_orbit_reps(const std::vector<Int>& orders, const FgAbGroup& t) {
    const std::size_t kt = t.torsion_count(), m = orders.size();
    auto elems = all_elements(t);
    std::vector<std::vector<std::size_t>> choices(m);
    Int work = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t e = 0; e < elems.size(); ++e) {
            bool ok = true;
            if (orders[i] != 0)
                for (std::size_t j = 0; j < kt && ok; ++j)
                    if ((orders[i] * elems[e][j]) % t.torsion_factors()[j] != 0) ok = false;
            if (ok) choices[i].push_back(e);
        }
        work *= Int(choices[i].size());
        if (work > kWorkBound) throw bound_error("epimorphism enumeration too large");
    }
    auto auts = automorphisms(t);

    std::vector<IntMatrix> out;
    std::set<std::string> seen;
    std::vector<std::size_t> pos(m, 0);
    while (true) {
        IntMatrix s(kt, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < kt; ++j) s.at(j, i) = elems[choices[i][pos[i]]][j];
        if (cols_generate(s, t) && !seen.count(key_of(s))) {
            out.push_back(s);
            // mark the whole Aut(t)-orbit as visited (the action is free)
            for (const IntMatrix& a : auts) {
                IntMatrix c = a * s;
                reduce_torsion_rows(c, t);
                seen.insert(key_of(c));
            }
        }
        std::size_t i = m;
        bool done = (m == 0);
        while (i > 0) {
            --i;
            if (++pos[i] < choices[i].size()) break;
            pos[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

}  // namespace

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Int> torsion_factors)
    : n_(free_rank), tors_(std::move(torsion_factors)) {
    check_chain(tors_);
}

FgAbGroup FgAbGroup::from_invariants(std::size_t free_rank, const std::vector<Int>& factors) {
    std::vector<Int> kept;
    for (const Int& d : factors) {
        if (d <= 0) throw input_error("invariant factors must be positive");
        if (d > 1) kept.push_back(d);
    }
    if (!kept.empty()) {
        IntMatrix diag(kept.size(), kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) diag.at(i, i) = kept[i];
        auto inv = smith_invariants(diag);
        kept.clear();
        for (const Int& d : inv)
            if (d > 1) kept.push_back(d);
    }
    return FgAbGroup(free_rank, kept);
}

Int FgAbGroup::torsion_order() const {
    Int o = 1;
    for (const Int& d : tors_) o *= d;
    return o;
}

Int FgAbGroup::order() const {
    if (!is_finite()) throw input_error("order of an infinite group");
    return torsion_order();
}

IntMatrix FgAbGroup::relation_generators() const {
    IntMatrix r(preimage_rank(), tors_.size());
    for (std::size_t i = 0; i < tors_.size(); ++i) r.at(n_ + i, i) = tors_[i];
    return r;
}

Lattice FgAbGroup::relation_lattice() const {
    return Lattice(preimage_rank(), relation_generators());
}

std::string FgAbGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (n_ > 0) {
        os << "Z";
        if (n_ > 1) os << "^" << n_;
        first = false;
    }
    for (const Int& d : tors_) {
        if (!first) os << " + ";
        os << "Z_" << d.str();
        first = false;
    }
    return os.str();
}

Int cyclic_exponent(const FgAbGroup& a) {
    return a.torsion_factors().empty() ? Int(1) : a.torsion_factors().back();
}

Subgroup::Subgroup(const FgAbGroup& parent, const IntMatrix& generators)
    : parent_(parent),
      pre_(parent.preimage_rank(), generators.hstack(parent.relation_generators())) {
    if (generators.rows() != parent.preimage_rank())
        throw input_error("Subgroup: generators must have preimage_rank rows");
}

Subgroup Subgroup::zero(const FgAbGroup& parent) {
    return Subgroup(parent, IntMatrix(parent.preimage_rank(), 0));
}

Subgroup Subgroup::full(const FgAbGroup& parent) {
    return Subgroup(parent, IntMatrix::identity(parent.preimage_rank()));
}

Subgroup Subgroup::from_preimage(const FgAbGroup& parent, const Lattice& preimage) {
    if (preimage.ambient_rank() != parent.preimage_rank())
        throw input_error("Subgroup: preimage lattice has wrong ambient rank");
    if (!preimage.contains(parent.relation_lattice()))
        throw input_error("Subgroup: preimage lattice must contain the relations");
    return Subgroup(parent, preimage.generators());
}

bool Subgroup::contains(const Subgroup& o) const {
    if (parent_ != o.parent_) throw input_error("Subgroup::contains: different parents");
    return pre_.contains(o.pre_);
}

bool Subgroup::contains_element(const std::vector<Int>& x) const {
    return pre_.contains(x);
}

bool Subgroup::operator<(const Subgroup& o) const { return pre_ < o.pre_; }

std::string Subgroup::str() const {
    std::ostringstream os;
    os << "Subgroup(" << parent_.str() << ", " << pre_.generators().str() << ")";
    return os.str();
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent()) throw input_error("subgroup_sum: different parents");
    return Subgroup::from_preimage(a.parent(), lattice_sum(a.preimage(), b.preimage()));
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent()) throw input_error("subgroup_intersection: different parents");
    return Subgroup::from_preimage(a.parent(), lattice_intersection(a.preimage(), b.preimage()));
}

Subgroup subgroup_saturation(const Subgroup& s) {
    return Subgroup::from_preimage(s.parent(), saturation(s.preimage()));
}

FgAbGroup quotient_invariants(const Subgroup& xi) {
    auto inv = smith_invariants(xi.preimage().generators());
    std::size_t rank = 0;
    std::vector<Int> tors;
    for (const Int& d : inv) {
        if (d != 0) ++rank;
        if (d > 1) tors.push_back(d);
    }
    return FgAbGroup(xi.parent().preimage_rank() - rank, tors);
}

FgAbGroup determinant_group(const Subgroup& xi) {
    Lattice sat = saturation(xi.preimage());
    const IntMatrix& g = xi.preimage().generators();
    IntMatrix c(sat.rank(), g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) {
        auto coords = sat.solve(as_vector(g.col(j)));
        if (!coords) throw internal_error("determinant_group: saturation does not contain lattice");
        for (std::size_t i = 0; i < sat.rank(); ++i) c.at(i, j) = (*coords)[i];
    }
    auto inv = smith_invariants(c);
    std::vector<Int> tors;
    for (const Int& d : inv)
        if (d > 1) tors.push_back(d);
    return FgAbGroup(0, tors);
}

Homomorphism::Homomorphism(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& matrix)
    : src_(source), tgt_(target), m_(matrix) {
    if (m_.rows() != tgt_.preimage_rank() || m_.cols() != src_.preimage_rank())
        throw input_error("Homomorphism: matrix shape mismatch");
    Lattice rt = tgt_.relation_lattice();
    for (std::size_t i = 0; i < src_.torsion_count(); ++i) {
        std::vector<Int> v(tgt_.preimage_rank());
        std::size_t col = src_.free_rank() + i;
        for (std::size_t rrow = 0; rrow < tgt_.preimage_rank(); ++rrow)
            v[rrow] = src_.torsion_factors()[i] * m_.at(rrow, col);
        if (!rt.contains(v))
            throw input_error("Homomorphism: matrix does not respect source relations");
    }
}

bool Homomorphism::is_epi() const { return cols_generate(m_, tgt_); }

Subgroup Homomorphism::kernel() const {
    IntMatrix stacked = m_.hstack(tgt_.relation_generators());
    IntMatrix k = kernel_basis(stacked);
    IntMatrix xs(src_.preimage_rank(), k.cols());
    for (std::size_t i = 0; i < xs.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) xs.at(i, j) = k.at(i, j);
    return Subgroup(src_, xs);
}

std::vector<Int> Homomorphism::apply(const std::vector<Int>& x) const {
    if (x.size() != src_.preimage_rank()) throw input_error("Homomorphism::apply: wrong length");
    std::vector<Int> y(tgt_.preimage_rank(), Int(0));
    for (std::size_t i = 0; i < tgt_.preimage_rank(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += m_.at(i, j) * x[j];
    for (std::size_t i = tgt_.free_rank(); i < tgt_.preimage_rank(); ++i) {
        const Int& d = tgt_.torsion_factors()[i - tgt_.free_rank()];
        y[i] %= d;
        if (y[i] < 0) y[i] += d;
    }
    return y;
}

Homomorphism Homomorphism::compose(const Homomorphism& inner) const {
    if (inner.tgt_ != src_) throw input_error("Homomorphism::compose: chain mismatch");
    return Homomorphism(inner.src_, tgt_, m_ * inner.m_);
}

std::string Homomorphism::str() const {
    std::ostringstream os;
    os << src_.str() << " -> " << tgt_.str() << " by " << m_.str();
    return os.str();
}

bool is_quotient_of(const FgAbGroup& a, const FgAbGroup& h) {
    if (a.free_rank() > h.free_rank()) return false;
    Int m = Int(h.free_rank()) - Int(a.free_rank());
    std::set<Int> primes;
    for (const Int& d : a.torsion_factors())
        for (const auto& [p, e] : factorize(d)) {
            (void)e;
            primes.insert(p);
        }
    for (const Int& p : primes) {
        auto ea = p_partition(a.torsion_factors(), p);
        auto eh = p_partition(h.torsion_factors(), p);
        for (Int i = 1; i <= ea.front(); ++i) {
            Int ca = 0, ch = 0;
            for (const Int& e : ea)
                if (e >= i) ++ca;
            for (const Int& e : eh)
                if (e >= i) ++ch;
            if (ca > m + ch) return false;
        }
    }
    return true;
}

Int gamma_count(const FgAbGroup& h, const FgAbGroup& a) {
    if (!is_quotient_of(a, h)) return 0;
    Int m = Int(h.free_rank()) - Int(a.free_rank());
    std::set<Int> primes;
    for (const Int& d : a.torsion_factors())
        for (const auto& [p, e] : factorize(d)) {
            (void)e;
            primes.insert(p);
        }
    Rat total = 1;
    for (const Int& p : primes)
        total *= gamma_prime_factor(m, h.torsion_factors(), a.torsion_factors(), p);
    if (den_of(total) != 1) throw internal_error("gamma_count: non-integer total");
    return num_of(total);
}

std::vector<IntMatrix> automorphisms(const FgAbGroup& t) {
    if (!t.is_finite()) throw input_error("automorphisms: finite groups only");
    if (t.torsion_order() > kAutBound) throw bound_error("automorphisms: group too large");
    const std::size_t k = t.torsion_count();
    if (k == 0) return {IntMatrix(0, 0)};
    auto elems = all_elements(t);
    std::vector<std::vector<std::size_t>> choices(k);
    Int work = 1;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t e = 0; e < elems.size(); ++e) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                if ((t.torsion_factors()[i] * elems[e][j]) % t.torsion_factors()[j] != 0) ok = false;
            if (ok) choices[i].push_back(e);
        }
        work *= Int(choices[i].size());
        if (work > kWorkBound) throw bound_error("automorphisms: enumeration too large");
    }
    std::vector<IntMatrix> out;
    std::vector<std::size_t> pos(k, 0);
    while (true) {
        IntMatrix s(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s.at(j, i) = elems[choices[i][pos[i]]][j];
        if (cols_generate(s, t)) out.push_back(s);
        std::size_t i = k;
        bool done = false;
        while (i > 0) {
            --i;
            if (++pos[i] < choices[i].size()) break;
            pos[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

std::vector<Homomorphism> enumerate_epis_mod_aut(const FgAbGroup& g, const FgAbGroup& a) {
    if (!g.is_finite() || !a.is_finite())
        throw input_error("enumerate_epis_mod_aut: finite groups only");
    if (a.torsion_order() > kAutBound) throw bound_error("enumerate_epis_mod_aut: target too large");
    auto reps = epi_orbit_reps(g.torsion_factors(), a);
    std::vector<Homomorphism> out;
    for (const IntMatrix& s : reps) out.emplace_back(g, a, s);
    return out;
}

std::vector<Homomorphism> fiber_representatives(const Homomorphism& nu_bar, const FgAbGroup& a) {
    const FgAbGroup& h = nu_bar.source();
    if (nu_bar.target() != FgAbGroup::free_group(a.free_rank()))
        throw input_error("fiber_representatives: nu_bar must target the free part of A");
    if (!nu_bar.is_epi()) throw input_error("fiber_representatives: nu_bar must be surjective");
    const std::size_t r = a.free_rank(), big_n = h.preimage_rank();
    const IntMatrix& mbar = nu_bar.matrix();  // r x N

    IntMatrix b = kernel_basis(mbar);  // N x (N - r), saturated
    const std::size_t kk = b.cols();

    IntMatrix section(big_n, r);
    if (r > 0) {
        auto snf = smith_normal_form(mbar);
        for (std::size_t i = 0; i < r; ++i)
            if (snf.d.at(i, i) != 1)
                throw internal_error("fiber_representatives: free quotient map not unimodular");
        IntMatrix dplus(big_n, r);
        for (std::size_t i = 0; i < r; ++i) dplus.at(i, i) = 1;
        section = snf.v * dplus * snf.u;
    }
    IntMatrix pr = IntMatrix::identity(big_n) - section * mbar;

    // coordinates on the kernel: columns of pr and of the relations, in basis b
    Lattice bl(big_n, b);
    IntMatrix c_pr(kk, big_n);
    for (std::size_t j = 0; j < big_n; ++j) {
        auto c = bl.solve(as_vector(pr.col(j)));
        if (!c) throw internal_error("fiber_representatives: projection misses kernel");
        for (std::size_t i = 0; i < kk; ++i) c_pr.at(i, j) = (*c)[i];
    }
    IntMatrix rel = h.relation_generators();
    IntMatrix c_rel(kk, rel.cols());
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        auto c = bl.solve(as_vector(rel.col(j)));
        if (!c) throw internal_error("fiber_representatives: relations miss kernel");
        for (std::size_t i = 0; i < kk; ++i) c_rel.at(i, j) = (*c)[i];
    }
    auto ks = smith_normal_form(c_rel);  // kernel = Z^kk / span(c_rel), y = U_K c
    std::vector<Int> orders(kk, Int(0));
    for (std::size_t i = 0; i < std::min(kk, c_rel.cols()); ++i) orders[i] = ks.d.at(i, i);

    FgAbGroup t(0, a.torsion_factors());
    auto reps = epi_orbit_reps(orders, t);

    IntMatrix lower_base = ks.u * c_pr;  // kk x N
    std::vector<Homomorphism> out;
    for (const IntMatrix& s : reps) {
        IntMatrix bottom = s * lower_base;  // k_T x N
        IntMatrix full = mbar.vstack(bottom);
        reduce_torsion_rows(full, a);
        out.emplace_back(h, a, full);
    }
    return out;
}

Homomorphism free_part(const Homomorphism& nu) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < nu.target().free_rank(); ++i) idx.push_back(i);
    return Homomorphism(nu.source(), FgAbGroup::free_group(nu.target().free_rank()),
                        nu.matrix().select_rows(idx));
}

bool equivalent_epis(const Homomorphism& nu1, const Homomorphism& nu2) {
    if (nu1.source() != nu2.source() || nu1.target() != nu2.target())
        throw input_error("equivalent_epis: mismatched source or target");
    if (!nu1.is_epi() || !nu2.is_epi())
        throw input_error("equivalent_epis: both maps must be surjective");
    const FgAbGroup& a = nu1.target();
    const std::size_t r = a.free_rank(), kt = a.torsion_count(), big_n = nu1.source().preimage_rank();
    std::vector<std::size_t> fr, tr;
    for (std::size_t i = 0; i < r; ++i) fr.push_back(i);
    for (std::size_t i = r; i < r + kt; ++i) tr.push_back(i);
    IntMatrix f1 = nu1.matrix().select_rows(fr), f2 = nu2.matrix().select_rows(fr);
    IntMatrix t1 = nu1.matrix().select_rows(tr), t2 = nu2.matrix().select_rows(tr);

    if (r > 0) {
        auto snf = smith_normal_form(f1);
        for (std::size_t i = 0; i < r; ++i)
            if (snf.d.at(i, i) != 1) throw internal_error("equivalent_epis: free part not onto");
        IntMatrix dplus(big_n, r);
        for (std::size_t i = 0; i < r; ++i) dplus.at(i, i) = 1;
        IntMatrix s1 = snf.v * dplus * snf.u;
        IntMatrix p = f2 * s1;  // the only candidate for the free block
        if (abs(p.det()) != 1) return false;
        if (!(p * f1 == f2)) return false;
    }
    if (kt == 0) return true;

    // row j of (t2 - S t1) must be hit by some Z^r -> Z_{d_j} twist of f1
    std::vector<Lattice> row_lat;
    for (std::size_t j = 0; j < kt; ++j) {
        IntMatrix scaled(big_n, big_n);
        for (std::size_t i = 0; i < big_n; ++i) scaled.at(i, i) = a.torsion_factors()[j];
        row_lat.emplace_back(big_n, f1.transpose().hstack(scaled));
    }
    FgAbGroup t(0, a.torsion_factors());
    for (const IntMatrix& s : automorphisms(t)) {
        IntMatrix delta = t2 - s * t1;
        bool ok = true;
        for (std::size_t j = 0; j < kt && ok; ++j) {
            std::vector<Int> row(big_n);
            for (std::size_t c = 0; c < big_n; ++c) row[c] = delta.at(j, c);
            if (!row_lat[j].contains(row)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace df
