#include "gnk/divided_difference.hpp"

#include <cmath>
#include <cstddef>

namespace gnk {

namespace {

Vector eval_checked(const VectorFn& g, const Vector& z, std::size_t expected_m) {
    Vector r = g(z);
    if (expected_m != 0 && r.size() != expected_m)
        throw DimensionMismatch("divided_difference: inconsistent output dimension");
    if (!all_finite(r)) throw NonFiniteEvaluation("divided_difference: non-finite evaluation");
    return r;
}

}  // namespace

Matrix divided_difference(const VectorFn& g, const Vector& x, const Vector& y,
                          const DDPolicy& policy) {
    if (x.size() != y.size()) throw DimensionMismatch("divided_difference: point sizes differ");
    if (x.empty()) throw DomainError("divided_difference: empty points");
    if (!(policy.coincidence_tol > 0.0) || !(policy.fallback_step > 0.0))
        throw DomainError("divided_difference: policy steps must be positive");
    if (!all_finite(x) || !all_finite(y))
        throw NonFiniteEvaluation("divided_difference: non-finite points");

    const std::size_t n = x.size();
    Vector z = y;  // carries x in coordinates [0, j) and y in [j, n)
    Vector gz = eval_checked(g, z, 0);
    const std::size_t m = gz.size();

    Matrix d(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double diff = x[j] - y[j];
        if (std::abs(diff) <= policy.coincidence_tol * std::max(1.0, std::abs(x[j]))) {
            // Coincident coordinate: central difference at the mixed point.
            Vector zp = z;
            Vector zm = z;
            zp[j] = x[j] + policy.fallback_step;
            zm[j] = x[j] - policy.fallback_step;
            const Vector gp = eval_checked(g, zp, m);
            const Vector gm = eval_checked(g, zm, m);
            for (std::size_t i = 0; i < m; ++i)
                d(i, j) = (gp[i] - gm[i]) / (2.0 * policy.fallback_step);
            if (x[j] != y[j]) {
                z[j] = x[j];
                gz = eval_checked(g, z, m);
            }
        } else {
            z[j] = x[j];
            Vector gnext = eval_checked(g, z, m);
            for (std::size_t i = 0; i < m; ++i) d(i, j) = (gnext[i] - gz[i]) / diff;
            gz = std::move(gnext);
        }
    }
    return d;
}

std::pair<Vector, Vector> kurchatov_points(const Vector& x_n, const Vector& x_prev) {
    if (x_n.size() != x_prev.size())
        throw DimensionMismatch("kurchatov_points: point sizes differ");
    Vector lead(x_n.size());
    for (std::size_t i = 0; i < x_n.size(); ++i) lead[i] = 2.0 * x_n[i] - x_prev[i];
    return {std::move(lead), x_prev};
}

}  // namespace gnk
