#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector operator*(const IntVector& v) const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Inverse of a square matrix with determinant +-1. Throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

Integer gcd_of(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);

/// Exact "p/q" form with q > 0, also for integers ("3/1").
std::string to_fraction_string(const Rational& q);

}  // namespace toric
