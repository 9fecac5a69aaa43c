#include "df/laurent.hpp"

#include "df/limits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace df {

namespace {

constexpr std::size_t kMinorBound = 6;     // largest minor size

std::vector<Int> reduce_exponent(const FgAbGroup& h, std::vector<Int> e) {
    if (e.size() != h.preimage_rank()) throw input_error("exponent length mismatch");
    const std::size_t n = h.free_rank();
    for (std::size_t i = 0; i < h.torsion_count(); ++i) {
        const Int& d = h.torsion_factors()[i];
        Int& v = e[n + i];
        v %= d;
        if (v < 0) v += d;
    }
    return e;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& x) {
    if (m.cols() != x.size()) throw internal_error("mat_vec shape");
    std::vector<Int> out(m.rows(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * x[j];
    return out;
}

}  // namespace

// ============================================================
// LaurentPolynomial
// ============================================================

LaurentPolynomial::LaurentPolynomial(const FgAbGroup& ambient) : ambient_(ambient) {}

LaurentPolynomial LaurentPolynomial::from_integer_terms(
    const FgAbGroup& ambient, const std::vector<std::pair<std::vector<Int>, Int>>& terms) {
    LaurentPolynomial f(ambient);
    for (const auto& [e, c] : terms) f.add_term(e, CyclotomicScalar(Rat(c)));
    return f;
}

void LaurentPolynomial::add_term(std::vector<Int> exp, const CyclotomicScalar& c) {
    if (c.is_zero()) return;
    exp = reduce_exponent(ambient_, std::move(exp));
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exp), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPolynomial::integer_coefficients() const {
    for (const auto& [e, c] : terms_) {
        Rat r;
        if (!c.is_rational(&r)) return false;
        if (denominator(r) != 1) return false;
    }
    return true;
}

CyclotomicScalar LaurentPolynomial::coefficient_sum() const {
    CyclotomicScalar s;
    for (const auto& [e, c] : terms_) s = s + c;
    return s;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (ambient_ != o.ambient_) throw input_error("ambient mismatch in +");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(ambient_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (ambient_ != o.ambient_) throw input_error("ambient mismatch in *");
    LaurentPolynomial r(ambient_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<Int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    return ambient_ == o.ambient_ && terms_ == o.terms_;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*t^(";
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i].str();
        os << ")";
    }
    return os.str();
}

// ============================================================
// admissible partitions
// ============================================================

namespace {

struct PartitionSearch {
    std::size_t s = 0;
    std::size_t n = 0;
    const std::vector<std::vector<Int>>* exps = nullptr;
    const std::vector<Int>* coeffs = nullptr;
    std::vector<Int> suffix_abs;     // sum of |c_j|, j >= i
    std::vector<std::size_t> block;  // restricted growth string
    std::vector<Int> block_sum;
    std::set<Lattice> found;

    void run() {
        block.assign(s, 0);
        descend(0, 0);
    }

    void descend(std::size_t pos, std::size_t nblocks) {
        if (pos == s) {
            for (const Int& b : block_sum)
                if (b != 0) return;
            emit();
            return;
        }
        for (std::size_t b = 0; b <= nblocks; ++b) {
            if (b == nblocks) block_sum.push_back(Int(0));
            block[pos] = b;
            block_sum[b] += (*coeffs)[pos];
            Int total = 0;
            for (const Int& v : block_sum) total += abs(v);
            // each unplaced coefficient can cancel at most its own magnitude
            if (total <= suffix_abs[pos + 1]) descend(pos + 1, b == nblocks ? nblocks + 1 : nblocks);
            block_sum[b] -= (*coeffs)[pos];
            if (b == nblocks) block_sum.pop_back();
        }
    }

    void emit() {
        std::vector<std::vector<Int>> rows;
        std::size_t nblocks = 0;
        for (std::size_t j = 0; j < s; ++j) nblocks = std::max(nblocks, block[j] + 1);
        for (std::size_t b = 0; b < nblocks; ++b) {
            long long first = -1;
            for (std::size_t j = 0; j < s; ++j) {
                if (block[j] != b) continue;
                if (first < 0) {
                    first = static_cast<long long>(j);
                    continue;
                }
                std::vector<Int> row(n, Int(0));
                for (std::size_t i = 0; i < n; ++i)
                    row[i] = (*exps)[static_cast<std::size_t>(first)][i] - (*exps)[j][i];
                rows.push_back(std::move(row));
            }
        }
        if (rows.empty()) return;  // all singleton blocks cannot sum to zero anyway
        IntMatrix m(rows.size(), n);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
        found.insert(Lattice(n, kernel_basis(m)));
    }
};

}  // namespace

std::vector<Lattice> admissible_tau1(const LaurentPolynomial& f) {
    const FgAbGroup& h = f.ambient();
    if (!h.is_torsion_free()) throw input_error("admissible_tau1 needs a torsion-free ambient group");
    if (!f.integer_coefficients()) throw input_error("admissible_tau1 needs integer coefficients");
    const std::size_t n = h.free_rank();
    if (f.is_zero()) return {Lattice::full(n)};
    if (f.term_count() > Limits::hypersurface_support)
        throw bound_error("support too large for the partition search");

    Rat at_one;
    f.coefficient_sum().is_rational(&at_one);
    if (at_one != 0) return {};  // no partition can zero every block

    PartitionSearch ps;
    std::vector<std::vector<Int>> exps;
    std::vector<Int> coeffs;
    for (const auto& [e, c] : f.terms()) {
        Rat r;
        c.is_rational(&r);
        exps.push_back(e);
        coeffs.push_back(numerator(r));
    }
    ps.s = exps.size();
    ps.n = n;
    ps.exps = &exps;
    ps.coeffs = &coeffs;
    ps.suffix_abs.assign(ps.s + 1, Int(0));
    for (std::size_t i = ps.s; i-- > 0;) ps.suffix_abs[i] = ps.suffix_abs[i + 1] + abs(coeffs[i]);
    ps.run();

    std::vector<Lattice> all(ps.found.begin(), ps.found.end());
    std::vector<Lattice> maximal;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && !dominated; ++j)
            if (i != j && all[j].contains(all[i]) && !(all[j] == all[i])) dominated = true;
        if (!dominated) maximal.push_back(all[i]);
    }
    return maximal;
}

// ============================================================
// restriction to a torsion-translated subtorus
// ============================================================

LaurentPolynomial restrict_to_coset(const LaurentPolynomial& f, const Subgroup& ker,
                                    const TorsionCharacter& alpha) {
    const FgAbGroup& h = f.ambient();
    if (ker.parent() != h || alpha.parent() != h)
        throw input_error("restrict_to_coset: mismatched group");
    const std::size_t big_n = h.preimage_rank();

    const Subgroup sat = subgroup_saturation(ker);
    const IntMatrix gens = sat.preimage().generators();
    const std::size_t c = sat.preimage().rank();

    IntMatrix q_map = IntMatrix::identity(big_n);
    if (c > 0) {
        SnfResult snf = smith_normal_form(gens);
        for (std::size_t i = 0; i < c; ++i)
            if (snf.d.at(i, i) != 1) throw internal_error("saturated basis with nontrivial invariant");
        std::vector<std::size_t> lower;
        for (std::size_t i = c; i < big_n; ++i) lower.push_back(i);
        q_map = snf.u.select_rows(lower);
    }
    const std::size_t r = big_n - c;

    LaurentPolynomial g(FgAbGroup::free_group(r));
    for (const auto& [a, coeff] : f.terms()) {
        std::vector<Int> w = (r == 0) ? std::vector<Int>{} : mat_vec(q_map, a);
        g.add_term(std::move(w), CyclotomicScalar::from_rational_angle(alpha.evaluate(a)) * coeff);
    }
    return g;
}

bool hypersurface_positive_dim(const LaurentPolynomial& g) {
    if (!g.ambient().is_torsion_free())
        throw input_error("hypersurface_positive_dim expects a torus coordinate ring");
    const std::size_t r = g.ambient().free_rank();
    if (g.is_zero()) return r >= 1;
    if (r <= 1) return false;
    return g.term_count() >= 2;
}

// ============================================================
// words and presentations
// ============================================================

GroupWord::GroupWord(std::size_t alphabet, std::vector<long long> letters) : q_(alphabet) {
    for (long long l : letters) {
        if (l == 0 || l > static_cast<long long>(q_) || l < -static_cast<long long>(q_))
            throw input_error("word letter out of range");
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

GroupWord GroupWord::parse(std::size_t alphabet, const std::string& text) {
    std::vector<long long> letters;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 'x') throw input_error("bad word token: " + tok);
        std::size_t caret = tok.find('^');
        long long idx = 0, exp = 1;
        try {
            idx = std::stoll(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                                      : caret - 1));
            if (caret != std::string::npos) exp = std::stoll(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw input_error("bad word token: " + tok);
        }
        if (idx < 1 || idx > static_cast<long long>(alphabet))
            throw input_error("generator index out of range in: " + tok);
        const long long step = exp >= 0 ? idx : -idx;
        for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i) letters.push_back(step);
    }
    return GroupWord(alphabet, std::move(letters));
}

std::vector<Int> GroupWord::exponent_sums() const {
    std::vector<Int> e(q_, Int(0));
    for (long long l : letters_) {
        if (l > 0)
            e[static_cast<std::size_t>(l - 1)] += 1;
        else
            e[static_cast<std::size_t>(-l - 1)] -= 1;
    }
    return e;
}

std::string GroupWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        const long long l = letters_[i];
        const long long run = static_cast<long long>(j - i);
        if (i > 0) os << " ";
        os << "x" << (l > 0 ? l : -l);
        const long long e = l > 0 ? run : -run;
        if (e != 1) os << "^" << e;
        i = j;
    }
    return os.str();
}

Presentation::Presentation(std::size_t generators, std::vector<GroupWord> relators)
    : q_(generators), rel_(std::move(relators)), ab_(FgAbGroup::free_group(generators)),
      phi_(IntMatrix::identity(generators)) {
    for (const GroupWord& w : rel_)
        if (w.alphabet() != q_) throw input_error("relator over a different alphabet");
    const std::size_t m = rel_.size();
    if (m == 0) return;

    IntMatrix e(q_, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Int> col = rel_[j].exponent_sums();
        for (std::size_t i = 0; i < q_; ++i) e.at(i, j) = col[i];
    }
    SnfResult snf = smith_normal_form(e);
    std::vector<std::size_t> free_rows, torsion_rows;
    std::vector<Int> factors;
    for (std::size_t i = 0; i < q_; ++i) {
        Int d = (i < std::min(q_, m)) ? snf.d.at(i, i) : Int(0);
        if (d == 0) {
            free_rows.push_back(i);
        } else if (d >= 2) {
            torsion_rows.push_back(i);
            factors.push_back(d);
        }
    }
    ab_ = FgAbGroup(free_rows.size(), factors);
    std::vector<std::size_t> order = free_rows;
    order.insert(order.end(), torsion_rows.begin(), torsion_rows.end());
    phi_ = snf.u.select_rows(order);
}

std::vector<std::vector<LaurentPolynomial>> fox_alexander_matrix(const Presentation& p) {
    const FgAbGroup& h = p.abelianization();
    const IntMatrix& phi = p.coordinate_map();
    const std::size_t q = p.generators();
    std::vector<std::vector<LaurentPolynomial>> rows;
    for (const GroupWord& w : p.relators()) {
        std::vector<LaurentPolynomial> row(q, LaurentPolynomial(h));
        std::vector<Int> cur(q, Int(0));
        for (long long l : w.letters()) {
            if (l > 0) {
                const std::size_t i = static_cast<std::size_t>(l - 1);
                row[i].add_term(mat_vec(phi, cur), CyclotomicScalar(1));
                cur[i] += 1;
            } else {
                const std::size_t i = static_cast<std::size_t>(-l - 1);
                cur[i] -= 1;
                row[i].add_term(mat_vec(phi, cur), CyclotomicScalar(-1));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ============================================================
// multivariate polynomial gcd over Z (primitive pseudo-remainders)
// ============================================================

namespace {

using MPoly = std::map<std::vector<long long>, Int>;  // exponent -> coefficient
using UniView = std::map<long long, MPoly>;           // degree in last variable

void mp_prune(MPoly& p) {
    for (auto it = p.begin(); it != p.end();)
        it = (it->second == 0) ? p.erase(it) : std::next(it);
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<long long> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r[e] += ca * cb;
        }
    mp_prune(r);
    return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b) r[e] -= c;
    mp_prune(r);
    return r;
}

// exact division in the lex term order; throws if not exact
MPoly mp_exact_div(const MPoly& a, const MPoly& b, std::size_t nvars) {
    if (b.empty()) throw internal_error("division by zero polynomial");
    MPoly rem = a, quot;
    while (!rem.empty()) {
        const auto& [ea, ca] = *rem.rbegin();
        const auto& [eb, cb] = *b.rbegin();
        std::vector<long long> e(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i) {
            e[i] = ea[i] - eb[i];
            if (e[i] < 0) throw internal_error("inexact polynomial division");
        }
        if (ca % cb != 0) throw internal_error("inexact polynomial division");
        MPoly t{{e, ca / cb}};
        quot[e] += t[e];
        rem = mp_sub(rem, mp_mul(t, b));
    }
    mp_prune(quot);
    return quot;
}

UniView uni_view(const MPoly& p) {
    UniView v;
    for (const auto& [e, c] : p) {
        std::vector<long long> head(e.begin(), e.end() - 1);
        v[e.back()][head] += c;
    }
    for (auto it = v.begin(); it != v.end();) {
        mp_prune(it->second);
        it = it->second.empty() ? v.erase(it) : std::next(it);
    }
    return v;
}

MPoly uni_flatten(const UniView& v) {
    MPoly p;
    for (const auto& [d, coeff] : v)
        for (const auto& [e, c] : coeff) {
            std::vector<long long> full(e);
            full.push_back(d);
            p[full] += c;
        }
    mp_prune(p);
    return p;
}

MPoly lift_var(const MPoly& p) {  // (n-1)-variable poly as n-variable, degree 0
    MPoly r;
    for (const auto& [e, c] : p) {
        std::vector<long long> full(e);
        full.push_back(0);
        r[full] = c;
    }
    return r;
}

MPoly mp_gcd(MPoly a, MPoly b, std::size_t nvars);

MPoly uni_content(const UniView& v, std::size_t nsub) {
    MPoly g;
    for (const auto& [d, coeff] : v) g = mp_gcd(g, coeff, nsub);
    return g;
}

UniView uni_divide_content(const UniView& v, const MPoly& cont, std::size_t nsub) {
    UniView r;
    for (const auto& [d, coeff] : v) r[d] = mp_exact_div(coeff, cont, nsub);
    return r;
}

// R := lc(B) * R - x^(dr-db) * lc(R) * B, repeated until deg R < deg B
UniView uni_prem(UniView r, const UniView& b, std::size_t nsub) {
    const long long db = b.rbegin()->first;
    const MPoly& lb = b.rbegin()->second;
    while (!r.empty() && r.rbegin()->first >= db) {
        const long long dr = r.rbegin()->first;
        MPoly lr = r.rbegin()->second;
        UniView next;
        for (const auto& [d, c] : r)
            if (d != dr) next[d] = mp_mul(lb, c);
        for (const auto& [d, c] : b) {
            if (d == db) continue;
            const long long shifted = d + (dr - db);
            MPoly prod = mp_mul(lr, c);
            auto it = next.find(shifted);
            if (it == next.end())
                next[shifted] = mp_sub(MPoly{}, prod);
            else
                it->second = mp_sub(it->second, prod);
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.empty() ? next.erase(it) : std::next(it);
        r = std::move(next);
    }
    return r;
}

MPoly mp_gcd(MPoly a, MPoly b, std::size_t nvars) {
    mp_prune(a);
    mp_prune(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (nvars == 0) {
        Int g = gcd(a.begin()->second, b.begin()->second);
        if (g < 0) g = -g;
        return MPoly{{{}, g}};
    }
    UniView av = uni_view(a), bv = uni_view(b);
    const std::size_t nsub = nvars - 1;
    MPoly ca = uni_content(av, nsub), cb = uni_content(bv, nsub);
    UniView ap = uni_divide_content(av, ca, nsub), bp = uni_divide_content(bv, cb, nsub);
    MPoly gc = mp_gcd(ca, cb, nsub);
    if (ap.rbegin()->first < bp.rbegin()->first) std::swap(ap, bp);
    while (!bp.empty()) {
        UniView r = uni_prem(ap, bp, nsub);
        ap = std::move(bp);
        if (r.empty()) {
            bp.clear();
        } else {
            MPoly cr = uni_content(r, nsub);
            bp = uni_divide_content(r, cr, nsub);
        }
    }
    return mp_mul(uni_flatten(ap), lift_var(gc));
}

MPoly mp_det(std::vector<std::vector<MPoly>> m, std::size_t nvars) {
    const std::size_t k = m.size();
    if (k == 0) return MPoly{{std::vector<long long>(nvars, 0), Int(1)}};
    if (k == 1) return m[0][0];
    MPoly acc;
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j].empty()) continue;
        std::vector<std::vector<MPoly>> sub(k - 1, std::vector<MPoly>(k - 1));
        for (std::size_t r = 1; r < k; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) sub[r - 1][cc++] = m[r][c];
        }
        MPoly term = mp_mul(m[0][j], mp_det(std::move(sub), nvars));
        if (j % 2 == 0) {
            for (const auto& [e, c] : term) acc[e] += c;
            mp_prune(acc);
        } else {
            acc = mp_sub(acc, term);
        }
    }
    return acc;
}

// strip monomial units; make the lex-leading coefficient positive
MPoly mp_normalize(MPoly p, std::size_t nvars) {
    mp_prune(p);
    if (p.empty()) return p;
    std::vector<long long> mins(nvars, 0);
    bool first = true;
    for (const auto& [e, c] : p) {
        for (std::size_t i = 0; i < nvars; ++i)
            mins[i] = first ? e[i] : std::min(mins[i], e[i]);
        first = false;
    }
    MPoly shifted;
    for (const auto& [e, c] : p) {
        std::vector<long long> e2(e);
        for (std::size_t i = 0; i < nvars; ++i) e2[i] -= mins[i];
        shifted[e2] = c;
    }
    if (shifted.rbegin()->second < 0)
        for (auto& [e, c] : shifted) c = -c;
    return shifted;
}

}  // namespace

LaurentPolynomial minors_gcd(const std::vector<std::vector<LaurentPolynomial>>& alex,
                             const FgAbGroup& ambient) {
    if (!ambient.is_torsion_free())
        throw input_error("minors_gcd needs a torsion-free coefficient group");
    const std::size_t nvars = ambient.free_rank();
    const std::size_t m = alex.size();
    LaurentPolynomial zero(ambient);
    if (m == 0) return zero;
    const std::size_t q = alex[0].size();
    for (const auto& row : alex) {
        if (row.size() != q) throw input_error("ragged Alexander matrix");
        for (const auto& e : row) {
            if (e.ambient() != ambient) throw input_error("entry over a different group");
            if (!e.integer_coefficients())
                throw input_error("minors_gcd needs integer coefficients");
        }
    }
    const std::size_t k = q - 1;
    if (k > kMinorBound) throw bound_error("minor size beyond the supported bound");
    if (m < k) return zero;

    // shift the whole matrix into nonnegative exponents; every k x k minor
    // changes by a monomial unit only
    std::vector<long long> mins(nvars, 0);
    for (const auto& row : alex)
        for (const auto& e : row)
            for (const auto& [exp, c] : e.terms())
                for (std::size_t i = 0; i < nvars; ++i) {
                    long long v = exp[i].convert_to<long long>();
                    mins[i] = std::min(mins[i], v);
                }
    std::vector<std::vector<MPoly>> mat(m, std::vector<MPoly>(q));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < q; ++j)
            for (const auto& [exp, c] : alex[i][j].terms()) {
                std::vector<long long> e(nvars);
                for (std::size_t v = 0; v < nvars; ++v)
                    e[v] = exp[v].convert_to<long long>() - mins[v];
                Rat r;
                c.is_rational(&r);
                mat[i][j][e] = numerator(r);
            }

    MPoly g;
    // iterate over k-subsets of rows, then drop one column each
    std::vector<std::vector<std::size_t>> rowsets;
    {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            rowsets.push_back(idx);
            long long i = static_cast<long long>(k) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + static_cast<std::size_t>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    for (const auto& rows : rowsets) {
        for (std::size_t drop = 0; drop < q; ++drop) {
            std::vector<std::vector<MPoly>> sub(k, std::vector<MPoly>(k));
            for (std::size_t r = 0; r < k; ++r) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c < q; ++c)
                    if (c != drop) sub[r][cc++] = mat[rows[r]][c];
            }
            g = mp_gcd(g, mp_det(std::move(sub), nvars), nvars);
        }
    }
    g = mp_normalize(std::move(g), nvars);

    LaurentPolynomial out(ambient);
    for (const auto& [e, c] : g) {
        std::vector<Int> exp(nvars);
        for (std::size_t i = 0; i < nvars; ++i) exp[i] = Int(e[i]);
        out.add_term(std::move(exp), CyclotomicScalar(Rat(c)));
    }
    return out;
}

}  // namespace df
