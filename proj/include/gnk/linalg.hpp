#pragma once

#include <cstddef>
#include <vector>

#include "gnk/errors.hpp"

namespace gnk {

using Vector = std::vector<double>;

// Dense row-major matrix. Sized for the small systems this library works
// with; no attempt is made at blocking or vectorization.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

bool all_finite(const Vector& v);
bool all_finite(const Matrix& a);

double norm2(const Vector& v);
double dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, double s);

Vector matvec(const Matrix& a, const Vector& v);
// aᵀ v without forming the transpose.
Vector tmatvec(const Matrix& a, const Vector& v);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);

// Largest singular value, by power iteration on aᵀa. Deterministic.
double spectral_norm(const Matrix& a);

// Inverse of a square matrix by Gauss-Jordan elimination with partial
// pivoting. Throws RankDeficient when a pivot collapses.
Matrix invert(const Matrix& a);

// Minimum-norm Gauss-Newton step: solves min ‖a·x - b‖₂ for m >= n via
// Householder QR. Throws RankDeficient when the smallest R-diagonal
// magnitude falls below 1e-12 times the largest.
Vector lstsq_step(const Matrix& a, const Vector& b);

}  // namespace gnk
