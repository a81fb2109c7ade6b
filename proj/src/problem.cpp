#include "gnk/problem.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <utility>

namespace gnk {

Vector residual(const Problem& p, const Vector& x) {
    if (x.size() != p.n) throw DimensionMismatch("residual: point has wrong dimension");
    Vector f = p.F(x);
    Vector g = p.G(x);
    if (f.size() != p.m || g.size() != p.m)
        throw DimensionMismatch("residual: component has wrong dimension");
    if (!all_finite(f) || !all_finite(g))
        throw NonFiniteEvaluation("residual: non-finite evaluation");
    return add(f, g);
}

double objective_value(const Problem& p, const Vector& x) {
    const double r = norm2(residual(p, x));
    return 0.5 * r * r;
}

Problem example1() {
    Problem p;
    p.name = "example1";
    p.n = 2;
    p.m = 2;
    p.F = [](const Vector& v) -> Vector {
        const double x = v[0];
        const double y = v[1];
        return {3.0 * x * x * y + y * y - 1.0, x * x * x * x + x * y * y * y - 1.0};
    };
    p.G = [](const Vector& v) -> Vector {
        return {std::abs(v[0] - 1.0), std::abs(v[1])};
    };
    p.jacobian_F = [](const Vector& v) -> Matrix {
        const double x = v[0];
        const double y = v[1];
        Matrix j(2, 2);
        j(0, 0) = 6.0 * x * y;
        j(0, 1) = 3.0 * x * x + 2.0 * y;
        j(1, 0) = 4.0 * x * x * x + y * y * y;
        j(1, 1) = 3.0 * x * y * y;
        return j;
    };
    p.known_solution = Vector{0.89465537, 0.32782652};
    p.known_residual_value = 0.0;
    return p;
}

Problem example2() {
    Problem p;
    p.name = "example2";
    p.n = 2;
    p.m = 3;
    p.F = [](const Vector& v) -> Vector {
        const double x = v[0];
        const double y = v[1];
        return {3.0 * x * x * y + y * y - 1.0, x * x * x * x + x * y * y * y - 1.0, 0.0};
    };
    p.G = [](const Vector& v) -> Vector {
        const double x = v[0];
        const double y = v[1];
        return {std::abs(x - 1.0), std::abs(y), std::abs(x * x - y)};
    };
    p.jacobian_F = [](const Vector& v) -> Matrix {
        const double x = v[0];
        const double y = v[1];
        Matrix j(3, 2);
        j(0, 0) = 6.0 * x * y;
        j(0, 1) = 3.0 * x * x + 2.0 * y;
        j(1, 0) = 4.0 * x * x * x + y * y * y;
        j(1, 1) = 3.0 * x * y * y;
        j(2, 0) = 0.0;
        j(2, 1) = 0.0;
        return j;
    };
    p.known_solution = Vector{0.74862800, 0.43039151};
    p.known_residual_value = 4.0469349e-2;
    return p;
}

Problem synthetic_linear(Matrix c, Vector d) {
    if (c.rows() != d.size()) throw DimensionMismatch("synthetic_linear: C rows != d size");
    if (c.rows() < c.cols())
        throw DimensionMismatch("synthetic_linear: C must have at least as many rows as columns");
    if (!all_finite(c) || !all_finite(d))
        throw NonFiniteEvaluation("synthetic_linear: non-finite data");

    // Full column rank is required up front; this also computes the solution.
    Vector sol = lstsq_step(c, d);
    Vector best_residual = sub(matvec(c, sol), d);
    const double value = 0.5 * dot(best_residual, best_residual);

    const std::size_t m = c.rows();
    auto cp = std::make_shared<Matrix>(std::move(c));
    auto dp = std::make_shared<Vector>(std::move(d));

    Problem p;
    p.name = "linear";
    p.n = cp->cols();
    p.m = m;
    p.F = [cp, dp](const Vector& v) -> Vector { return sub(matvec(*cp, v), *dp); };
    p.G = [m](const Vector&) -> Vector { return Vector(m, 0.0); };
    p.jacobian_F = [cp](const Vector&) -> Matrix { return *cp; };
    p.known_solution = std::move(sol);
    p.known_residual_value = value;
    return p;
}

Problem load_linear_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnknownProblem("load_linear_problem: cannot open " + path);
    std::size_t m = 0;
    std::size_t n = 0;
    if (!(in >> m >> n) || m == 0 || n == 0)
        throw DomainError("load_linear_problem: bad header in " + path);
    Matrix c(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(in >> c(i, j)))
                throw DomainError("load_linear_problem: truncated matrix in " + path);
    Vector d(m);
    for (std::size_t i = 0; i < m; ++i)
        if (!(in >> d[i])) throw DomainError("load_linear_problem: truncated rhs in " + path);

    Problem p = synthetic_linear(std::move(c), std::move(d));
    p.name = "linear:" + path;
    return p;
}

Problem find_problem(const std::string& name) {
    if (name == "example1") return example1();
    if (name == "example2") return example2();
    const std::string prefix = "linear:";
    if (name.rfind(prefix, 0) == 0) return load_linear_problem(name.substr(prefix.size()));
    throw UnknownProblem("find_problem: no problem named '" + name + "'");
}

}  // namespace gnk
