#pragma once

// Exact integer matrices on top of boost::multiprecision.
// Row-major storage, arbitrary precision, no overflow anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace df {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error kinds map onto the CLI exit codes: input -> 1, bound -> 2, internal -> 3.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& m) : std::runtime_error(m) {}
};
struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& m) : std::runtime_error(m) {}
};
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& m) : std::runtime_error(m) {}
};

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t r, std::size_t c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    IntMatrix col(std::size_t j) const;                     // as rows x 1
    IntMatrix cols_slice(std::size_t j0, std::size_t n) const;
    IntMatrix hstack(const IntMatrix& o) const;             // [this | o]
    IntMatrix vstack(const IntMatrix& o) const;
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;

    // Fraction-free (Bareiss) determinant; square matrices only.
    Int det() const;

    // Rank over Q, by fraction-free elimination (input left untouched).
    std::size_t rank_q() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// v as a column vector convenience.
IntMatrix col_vector(const std::vector<Int>& v);
std::vector<Int> as_vector(const IntMatrix& column);

}  // namespace df
