#pragma once

#include <functional>
#include <utility>

#include "gnk/linalg.hpp"

namespace gnk {

using VectorFn = std::function<Vector(const Vector&)>;

// Guards for the componentwise divided difference. A coordinate pair is
// treated as coincident when |x_j - y_j| <= coincidence_tol * max(1, |x_j|);
// such columns fall back to a central finite difference with step
// fallback_step.
struct DDPolicy {
    double coincidence_tol = 1e-12;
    double fallback_step = 1e-7;
};

// First-order divided difference of g at (x, y), built column by column:
// walk z from y to x one coordinate at a time and divide the induced change
// in g by x_j - y_j. Satisfies dd(x, y)·(x - y) = g(x) - g(y) exactly when
// no column is coincident, and is linear in g. Costs n+1 evaluations of g
// plus two per coincident column.
Matrix divided_difference(const VectorFn& g, const Vector& x, const Vector& y,
                          const DDPolicy& policy = {});

// Point pair (2·x_n - x_prev, x_prev) centered on x_n.
std::pair<Vector, Vector> kurchatov_points(const Vector& x_n, const Vector& x_prev);

}  // namespace gnk
