#include "gnk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gnk {

namespace {

// Relative threshold on the R diagonal below which the step operator is
// treated as rank deficient.
constexpr double kRankTol = 1e-12;

void check_same_size(const Vector& a, const Vector& b, const char* where) {
    if (a.size() != b.size()) throw DimensionMismatch(std::string(where) + ": size mismatch");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double value)
    : rows_(rows), cols_(cols), data_(rows * cols, value) {
    if (rows == 0 || cols == 0) throw DomainError("Matrix: dimensions must be positive");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix eye(n, n);
    for (std::size_t i = 0; i < n; ++i) eye(i, i) = 1.0;
    return eye;
}

bool all_finite(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool all_finite(const Matrix& a) {
    return std::all_of(a.data().begin(), a.data().end(),
                       [](double x) { return std::isfinite(x); });
}

double norm2(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const Vector& a, const Vector& b) {
    check_same_size(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector add(const Vector& a, const Vector& b) {
    check_same_size(a, b, "add");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    check_same_size(a, b, "sub");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scaled(const Vector& v, double s) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

Vector matvec(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("matvec: size mismatch");
    Vector r(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

Vector tmatvec(const Matrix& a, const Vector& v) {
    if (a.rows() != v.size()) throw DimensionMismatch("tmatvec: size mismatch");
    Vector r(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[j] += a(i, j) * v[i];
    return r;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: size mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("Matrix add: shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("Matrix sub: shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

double spectral_norm(const Matrix& a) {
    const std::size_t n = a.cols();
    Vector v(n);
    // Asymmetric start vector so no axis-aligned eigenvector is missed.
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * static_cast<double>(i);
    double vn = norm2(v);
    for (std::size_t i = 0; i < n; ++i) v[i] /= vn;

    double lambda = 0.0;
    for (int iter = 0; iter < 500; ++iter) {
        Vector w = tmatvec(a, matvec(a, v));
        const double wn = norm2(w);
        if (wn == 0.0) return 0.0;
        const double prev = lambda;
        lambda = wn;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
        if (std::abs(lambda - prev) <= 1e-14 * lambda) break;
    }
    return std::sqrt(lambda);
}

Matrix invert(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("invert: matrix not square");
    const std::size_t n = a.rows();
    double scale = 0.0;
    for (double x : a.data()) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) throw RankDeficient("invert: zero matrix");

    Matrix work = a;
    Matrix inv = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(work(i, k)) > std::abs(work(pivot, k))) pivot = i;
        if (std::abs(work(pivot, k)) <= 1e-13 * scale)
            throw RankDeficient("invert: singular matrix");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(k, j), work(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const double d = work(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work(k, j) /= d;
            inv(k, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = work(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= f * work(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

Vector lstsq_step(const Matrix& a, const Vector& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) throw DimensionMismatch("lstsq_step: rows of a != size of b");
    if (m < n) throw DimensionMismatch("lstsq_step: system is underdetermined (m < n)");
    if (!all_finite(a) || !all_finite(b))
        throw NonFiniteEvaluation("lstsq_step: non-finite input");

    // Householder reduction applied to [a | b]; only R and Qᵀb are kept.
    Matrix r = a;
    Vector y = b;
    Vector v(m);
    for (std::size_t k = 0; k < n; ++k) {
        double colnorm = 0.0;
        for (std::size_t i = k; i < m; ++i) colnorm += r(i, k) * r(i, k);
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;  // diagonal stays zero, rank test fires below

        const double alpha = r(k, k) > 0.0 ? -colnorm : colnorm;
        v[k] = r(k, k) - alpha;
        for (std::size_t i = k + 1; i < m; ++i) v[i] = r(i, k);
        double vtv = 0.0;
        for (std::size_t i = k; i < m; ++i) vtv += v[i] * v[i];
        r(k, k) = alpha;
        for (std::size_t i = k + 1; i < m; ++i) r(i, k) = 0.0;

        for (std::size_t j = k + 1; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < m; ++i) s += v[i] * r(i, j);
            s *= 2.0 / vtv;
            for (std::size_t i = k; i < m; ++i) r(i, j) -= s * v[i];
        }
        double s = 0.0;
        for (std::size_t i = k; i < m; ++i) s += v[i] * y[i];
        s *= 2.0 / vtv;
        for (std::size_t i = k; i < m; ++i) y[i] -= s * v[i];
    }

    double dmax = 0.0;
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const double d = std::abs(r(k, k));
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
    }
    if (dmax == 0.0 || dmin < kRankTol * dmax)
        throw RankDeficient("lstsq_step: rank-deficient step operator");

    Vector x(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = y[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= r(k, j) * x[j];
        x[k] = s / r(k, k);
    }
    return x;
}

}  // namespace gnk
