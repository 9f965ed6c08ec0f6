#include "toric/integer.hpp"

#include <stdexcept>
#include <utility>

namespace toric {

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
        out[r] = std::move(acc);
    }
    return out;
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix a = input;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            const Integer f = a(i, c);
            const Integer g = a(r, c);
            Integer content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                a(i, j) = a(i, j) * g - a(r, j) * f;
                content = boost::multiprecision::gcd(content, a(i, j));
            }
            // keep entries small
            if (content > 1) {
                for (std::size_t j = c; j < cols; ++j) a(i, j) /= content;
            }
        }
        ++r;
    }
    return r;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> a(n * 2 * n);
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * 2 * n + c]; };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) at(r, c) = Rational(m(r, c));
        at(r, n + r) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && at(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        if (p != c) {
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(c, j), at(p, j));
        }
        const Rational pivot = at(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || at(i, c) == 0) continue;
            const Rational f = at(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& q = at(r, n + c);
            if (denominator(q) != 1) throw std::domain_error("matrix is not unimodular");
            inv(r, c) = numerator(q);
        }
    }
    return inv;
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product size mismatch");
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace toric
