#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gnk/divided_difference.hpp"
#include "gnk/linalg.hpp"

namespace gnk {

using MatrixFn = std::function<Matrix(const Vector&)>;

// Least-squares residual split into a differentiable part F, with analytic
// Jacobian, and a continuous but possibly nondifferentiable part G. The
// objective is ½‖F(x)+G(x)‖².
struct Problem {
    std::string name;
    std::size_t n = 0;  // unknowns
    std::size_t m = 0;  // residual components, m >= n
    VectorFn F;
    VectorFn G;
    MatrixFn jacobian_F;
    std::optional<Vector> known_solution;        // reference point, if published
    std::optional<double> known_residual_value;  // ½‖F+G‖² at that point
};

// F(x) + G(x) with shape and finiteness checks.
Vector residual(const Problem& p, const Vector& x);

// ½‖F(x)+G(x)‖².
double objective_value(const Problem& p, const Vector& x);

// 2x2 system: F = (3x²y + y² - 1, x⁴ + xy³ - 1), G = (|x-1|, |y|).
Problem example1();

// 3x2 system: the two residuals of example1 plus a third row F₃ = 0,
// G₃ = |x² - y|, which leaves the model with a nonzero residual at the
// solution.
Problem example2();

// Linear residual C·x - d with G = 0. C must have full column rank.
Problem synthetic_linear(Matrix c, Vector d);

// Text format: m n, then the m·n entries of C in row-major order, then the
// m entries of d, all whitespace-separated.
Problem load_linear_problem(const std::string& path);

// Registry lookup: "example1", "example2", or "linear:<path>".
Problem find_problem(const std::string& name);

}  // namespace gnk
