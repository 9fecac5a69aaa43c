#include "df/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace df {

namespace {

Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
}
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}
void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.cols());
    std::size_t c = 0;
    for (std::size_t r = 0; r < a.rows() && c < a.cols(); ++r) {
        // gcd-eliminate row r across columns >= c until at most one nonzero remains
        while (true) {
            std::size_t best = a.cols();
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (a.at(r, j) == 0) continue;
                if (best == a.cols() || abs(a.at(r, j)) < abs(a.at(r, best))) best = j;
            }
            if (best == a.cols()) break;  // row r empty from c on
            bool others = false;
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (j == best || a.at(r, j) == 0) continue;
                Int q = a.at(r, j) / a.at(r, best);
                add_col(a, j, best, -q);
                add_col(u, j, best, -q);
                if (a.at(r, j) != 0) others = true;
            }
            if (!others) {
                swap_cols(a, c, best);
                swap_cols(u, c, best);
                if (a.at(r, c) < 0) { negate_col(a, c); negate_col(u, c); }
                for (std::size_t j = 0; j < c; ++j) {
                    Int q = floor_div(a.at(r, j), a.at(r, c));
                    if (q != 0) { add_col(a, j, c, -q); add_col(u, j, c, -q); }
                }
                ++c;
                break;
            }
        }
    }
    return {a, u};
}

SnfResult smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    std::size_t t = 0;
    const std::size_t lim = std::min(a.rows(), a.cols());
    while (t < lim) {
        // locate entry of least absolute value in the trailing submatrix
        std::size_t pi = a.rows(), pj = a.cols();
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                if (pi == a.rows() || abs(a.at(i, j)) < abs(a.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi == a.rows()) break;  // submatrix zero
        swap_rows(a, t, pi); swap_rows(u, t, pi);
        swap_cols(a, t, pj); swap_cols(v, t, pj);
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
            if (a.at(i, t) == 0) continue;
            Int q = a.at(i, t) / a.at(t, t);
            add_row(a, i, t, -q); add_row(u, i, t, -q);
            if (a.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (a.at(t, j) == 0) continue;
            Int q = a.at(t, j) / a.at(t, t);
            add_col(a, j, t, -q); add_col(v, j, t, -q);
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // pivot now alone in its row and column; enforce divisibility into the rest
        bool fixup = false;
        for (std::size_t i = t + 1; i < a.rows() && !fixup; ++i)
            for (std::size_t j = t + 1; j < a.cols() && !fixup; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    add_row(a, t, i, 1); add_row(u, t, i, 1);
                    fixup = true;
                }
        if (fixup) continue;
        if (a.at(t, t) < 0) { negate_row(a, t); negate_row(u, t); }
        ++t;
    }
    return {a, u, v};
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    std::size_t rank = 0;
    const std::size_t lim = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < lim; ++i)
        if (s.d.at(i, i) != 0) ++rank;
    std::vector<std::size_t> idx;
    for (std::size_t j = rank; j < m.cols(); ++j) idx.push_back(j);
    return s.v.select_cols(idx);
}

std::vector<Int> smith_invariants(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    const std::size_t lim = std::min(m.rows(), m.cols());
    std::vector<Int> d(lim);
    for (std::size_t i = 0; i < lim; ++i) d[i] = s.d.at(i, i);
    return d;
}

Lattice::Lattice(std::size_t ambient_rank) : n_(ambient_rank), gen_(ambient_rank, 0) {}

Lattice::Lattice(std::size_t ambient_rank, const IntMatrix& generators) : n_(ambient_rank) {
    if (generators.rows() != ambient_rank)
        throw input_error("Lattice: generator matrix must have ambient_rank rows");
    IntMatrix h = hermite_normal_form(generators).h;
    std::size_t k = 0;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (h.at(i, j) != 0) { zero = false; break; }
        if (zero) break;  // zero columns are last in column HNF
        ++k;
    }
    gen_ = h.cols_slice(0, k);
}

Lattice Lattice::span(std::size_t n, std::initializer_list<std::initializer_list<long long>> cols) {
    IntMatrix g(n, cols.size());
    std::size_t j = 0;
    for (auto& c : cols) {
        if (c.size() != n) throw input_error("Lattice::span: column length mismatch");
        std::size_t i = 0;
        for (auto x : c) g.at(i++, j) = x;
        ++j;
    }
    return Lattice(n, g);
}

bool Lattice::operator<(const Lattice& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (gen_.cols() != o.gen_.cols()) return gen_.cols() < o.gen_.cols();
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < gen_.cols(); ++j)
            if (gen_.at(i, j) != o.gen_.at(i, j)) return gen_.at(i, j) < o.gen_.at(i, j);
    return false;
}

bool Lattice::contains(const std::vector<Int>& v) const {
    return solve(v).has_value();
}

std::optional<std::vector<Int>> Lattice::solve(const std::vector<Int>& v) const {
    if (v.size() != n_) throw input_error("Lattice::solve: wrong vector length");
    std::vector<Int> w = v;
    std::vector<Int> coeff(gen_.cols(), Int(0));
    for (std::size_t j = 0; j < gen_.cols(); ++j) {
        std::size_t pr = 0;
        while (pr < n_ && gen_.at(pr, j) == 0) ++pr;
        const Int& p = gen_.at(pr, j);
        if (w[pr] % p != 0) return std::nullopt;
        Int q = w[pr] / p;
        if (q != 0)
            for (std::size_t i = pr; i < n_; ++i) w[i] -= q * gen_.at(i, j);
        coeff[j] = q;
    }
    for (const auto& x : w)
        if (x != 0) return std::nullopt;
    return coeff;
}

bool Lattice::contains(const Lattice& o) const {
    if (n_ != o.n_) throw input_error("Lattice::contains: ambient rank mismatch");
    for (std::size_t j = 0; j < o.gen_.cols(); ++j)
        if (!contains(as_vector(o.gen_.col(j)))) return false;
    return true;
}

std::string Lattice::str() const {
    std::ostringstream os;
    os << "Lattice(Z^" << n_ << ", " << gen_.str() << ")";
    return os.str();
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw input_error("lattice_sum: ambient rank mismatch");
    return Lattice(a.ambient_rank(), a.generators().hstack(b.generators()));
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw input_error("lattice_intersection: ambient rank mismatch");
    if (a.is_zero() || b.is_zero()) return Lattice(a.ambient_rank());
    IntMatrix stacked = a.generators().hstack(b.generators());
    IntMatrix k = kernel_basis(stacked);
    // first block of each kernel column gives coefficients on a's generators
    IntMatrix ka(a.generators().cols(), k.cols());
    for (std::size_t i = 0; i < ka.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) ka.at(i, j) = k.at(i, j);
    return Lattice(a.ambient_rank(), a.generators() * ka);
}

Lattice annihilator(const Lattice& l) {
    return Lattice(l.ambient_rank(), kernel_basis(l.generators().transpose()));
}

Lattice saturation(const Lattice& l) { return annihilator(annihilator(l)); }

}  // namespace df
