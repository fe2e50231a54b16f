#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nassoc/error.hpp"
#include "nassoc/exact/rational.hpp"

namespace nassoc {

// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : r_(rows), c_(cols), a_(std::move(entries)) {
        if (a_.size() != r_ * c_) throw DimensionMismatch("matrix entry count does not match shape");
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.c_) throw DimensionMismatch("ragged rows");
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::span<const T> row(std::size_t i) const { return {a_.data() + i * c_, c_}; }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> out;
        out.reserve(r_);
        for (std::size_t i = 0; i < r_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] = a.a_[i] + b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] = a.a_[i] - b.a_[i];
        return a;
    }
    std::vector<T> apply(std::span<const T> v) const {
        if (v.size() != c_) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> out(r_, T(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                if (!v[j].is_zero()) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using MatrixQ = Matrix<Rational>;
using VectorQ = std::vector<Rational>;

struct RrefResult {
    MatrixQ rows;                     // rank x cols, reduced row echelon
    std::vector<std::size_t> pivots;  // strictly increasing
};

// Fraction-free (Bareiss) forward elimination on the integer-scaled rows,
// then rational back substitution.  Pivot: first nonzero in column order.
RrefResult rref(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);
std::vector<VectorQ> nullspace(const MatrixQ& m);
// True when v lies in the row space described by r.
bool in_row_space(const RrefResult& r, std::span<const Rational> v);

// Gauss-Jordan over a field T (Rational or RatFunT).
template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = T(0) - det;
        }
        det = det * m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            T f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

template <class T>
Matrix<T> inverse(Matrix<T> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) throw DivisionByZero("singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        T piv = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) = m(c, j) / piv;
            inv(c, j) = inv(c, j) / piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            T f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - f * m(c, j);
                inv(i, j) = inv(i, j) - f * inv(c, j);
            }
        }
    }
    return inv;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

}  // namespace nassoc
