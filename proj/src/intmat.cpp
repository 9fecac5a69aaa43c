#include "df/intmat.hpp"

#include <sstream>

namespace df {

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries)
    : rows_(r), cols_(c), e_(std::move(entries)) {
    if (e_.size() != r * c) throw input_error("IntMatrix: entry count mismatch");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(0) {
    for (auto& r : rows) cols_ = std::max(cols_, r.size());
    e_.assign(rows_ * cols_, Int(0));
    std::size_t i = 0;
    for (auto& r : rows) {
        if (r.size() != cols_) throw input_error("IntMatrix: ragged initializer");
        std::size_t j = 0;
        for (auto v : r) e_[i * cols_ + j++] = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw input_error("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("IntMatrix: shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("IntMatrix: shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
    return s;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::col(std::size_t j) const {
    IntMatrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

IntMatrix IntMatrix::cols_slice(std::size_t j0, std::size_t n) const {
    IntMatrix c(rows_, n);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) = at(i, j0 + j);
    return c;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw input_error("IntMatrix: hstack row mismatch");
    IntMatrix h(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) h.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) h.at(i, cols_ + j) = o.at(i, j);
    }
    return h;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols_ != o.cols_) throw input_error("IntMatrix: vstack col mismatch");
    IntMatrix v(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) v.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) v.at(rows_ + i, j) = o.at(i, j);
    return v;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    IntMatrix s(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(idx[i], j);
    return s;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const {
    IntMatrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s.at(i, j) = at(i, idx[j]);
    return s;
}

Int IntMatrix::det() const {
    if (!is_square()) throw input_error("IntMatrix: det of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::size_t IntMatrix::rank_q() const {
    IntMatrix a = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && a.at(p, c) == 0) ++p;
        if (p == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(r, j), a.at(p, j));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (a.at(i, c) == 0) continue;
            Int g = gcd(a.at(i, c), a.at(r, c));
            Int fi = a.at(r, c) / g, fr = a.at(i, c) / g;
            for (std::size_t j = 0; j < cols_; ++j)
                a.at(i, j) = a.at(i, j) * fi - a.at(r, j) * fr;
        }
        ++r;
    }
    return r;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

IntMatrix col_vector(const std::vector<Int>& v) {
    IntMatrix c(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) c.at(i, 0) = v[i];
    return c;
}

std::vector<Int> as_vector(const IntMatrix& column) {
    if (column.cols() != 1) throw input_error("as_vector: expected a single column");
    std::vector<Int> v(column.rows());
    for (std::size_t i = 0; i < column.rows(); ++i) v[i] = column.at(i, 0);
    return v;
}

}  // namespace df
