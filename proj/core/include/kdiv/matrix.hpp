#pragma once

#include "kdiv/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kdiv::exact {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    T& at(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at");
        return (*this)(i, j);
    }
    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at");
        return (*this)(i, j);
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix: dimension mismatch");
        std::vector<T> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;

/// Exact determinant of a square rational matrix.  Denominators are cleared
/// row by row, the integer core runs fraction-free (Bareiss), and the scale
/// is divided back out, so intermediate growth stays polynomial.
Rational det_exact(const RatMatrix& m);

/// Basis of the right kernel {x : m x = 0}, computed by exact Gauss-Jordan
/// elimination.  Deterministic: pivots are the first nonzero entry per
/// column, free columns are scanned in ascending order, and each basis
/// vector has entry 1 in its free coordinate.
std::vector<std::vector<Rational>> kernel_basis_exact(const RatMatrix& m);

/// Rank over the rationals, by exact elimination.
std::size_t rank_exact(const RatMatrix& m);

/// Inverse of a square rational matrix, or std::nullopt when singular.
std::optional<RatMatrix> inverse_exact(const RatMatrix& m);

}  // namespace kdiv::exact
