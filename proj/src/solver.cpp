#include "gnk/solver.hpp"

#include <cfloat>
#include <cmath>
#include <string>

namespace gnk {

const char* to_string(Method m) {
    switch (m) {
        case Method::GNK: return "gnk";
        case Method::GNS: return "gns";
        case Method::SEC: return "sec";
        case Method::KUR: return "kur";
    }
    return "?";
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::MaxIterations: return "MaxIterations";
        case SolveStatus::Breakdown: return "Breakdown";
        case SolveStatus::NonFinite: return "NonFinite";
    }
    return "?";
}

Method method_from_string(std::string_view name) {
    if (name == "gnk") return Method::GNK;
    if (name == "gns") return Method::GNS;
    if (name == "sec") return Method::SEC;
    if (name == "kur") return Method::KUR;
    throw DomainError("method_from_string: unknown method '" + std::string(name) + "'");
}

Matrix assemble_operator(const Problem& p, const Vector& x_n, const Vector& x_prev,
                         Method method, const DDPolicy& policy) {
    if (x_n.size() != p.n || x_prev.size() != p.n)
        throw DimensionMismatch("assemble_operator: point has wrong dimension");

    const auto checked_jacobian = [&](const Vector& at) {
        Matrix j = p.jacobian_F(at);
        if (j.rows() != p.m || j.cols() != p.n)
            throw DimensionMismatch("assemble_operator: Jacobian has wrong shape");
        if (!all_finite(j)) throw NonFiniteEvaluation("assemble_operator: non-finite Jacobian");
        return j;
    };

    switch (method) {
        case Method::GNK: {
            const auto [lead, trail] = kurchatov_points(x_n, x_prev);
            return add(checked_jacobian(x_n), divided_difference(p.G, lead, trail, policy));
        }
        case Method::GNS:
            return add(checked_jacobian(x_n), divided_difference(p.G, x_n, x_prev, policy));
        case Method::SEC:
            return add(divided_difference(p.F, x_n, x_prev, policy),
                       divided_difference(p.G, x_n, x_prev, policy));
        case Method::KUR: {
            const auto [lead, trail] = kurchatov_points(x_n, x_prev);
            return add(divided_difference(p.F, lead, trail, policy),
                       divided_difference(p.G, lead, trail, policy));
        }
    }
    throw DomainError("assemble_operator: unknown method");
}

IterationTrace solve(const Problem& p, const Vector& x0, Method method,
                     const SolveConfig& config) {
    if (x0.size() != p.n) throw DimensionMismatch("solve: x0 has wrong dimension");
    if (!(config.epsilon > 0.0)) throw DomainError("solve: epsilon must be positive");
    if (config.max_iter < 1) throw DomainError("solve: max_iter must be at least 1");

    IterationTrace trace;
    if (!all_finite(x0)) {
        trace.status = SolveStatus::NonFinite;
        return trace;
    }

    Vector x_prev(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i) x_prev[i] = x0[i] - config.x_minus1_offset;
    Vector x = x0;
    trace.iterates.push_back(x_prev);
    trace.iterates.push_back(x);

    for (int k = 1; k <= config.max_iter; ++k) {
        Matrix a;
        Vector r;
        try {
            a = assemble_operator(p, x, x_prev, method, config.dd_policy);
            r = residual(p, x);
        } catch (const NonFiniteEvaluation&) {
            trace.status = SolveStatus::NonFinite;
            return trace;
        }

        Vector delta;
        try {
            delta = lstsq_step(a, r);
        } catch (const RankDeficient&) {
            trace.status = SolveStatus::Breakdown;
            return trace;
        } catch (const NonFiniteEvaluation&) {
            trace.status = SolveStatus::NonFinite;
            return trace;
        }

        Vector x_next = sub(x, delta);
        if (!all_finite(x_next)) {
            trace.status = SolveStatus::NonFinite;
            return trace;
        }

        double grad = 0.0;
        try {
            const Vector& probe =
                config.stop_index == StopIndex::NewIterate ? x_next : x;
            grad = norm2(tmatvec(a, residual(p, probe)));
        } catch (const NonFiniteEvaluation&) {
            trace.status = SolveStatus::NonFinite;
            return trace;
        }

        const double step = norm2(sub(x_next, x));
        trace.iterates.push_back(x_next);
        trace.step_norms.push_back(step);
        trace.grad_norms.push_back(grad);
        trace.iterations = k;

        if (step <= config.epsilon && grad <= config.epsilon) {
            trace.status = SolveStatus::Converged;
            return trace;
        }
        x_prev = std::move(x);
        x = std::move(x_next);
    }
    trace.status = SolveStatus::MaxIterations;
    return trace;
}

double empirical_order(const IterationTrace& trace, const Vector& x_star) {
    if (trace.status != SolveStatus::Converged)
        throw InsufficientData("empirical_order: trace did not converge");
    if (trace.iterates.size() < 5)
        throw InsufficientData("empirical_order: need at least four iterates");

    // Errors for x_0 onward; the auxiliary x_{-1} is not part of the fit.
    std::vector<double> errs;
    for (std::size_t i = 1; i < trace.iterates.size(); ++i)
        errs.push_back(norm2(sub(trace.iterates[i], x_star)));

    const double floor = 100.0 * DBL_EPSILON;
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        if (errs[i] < floor || errs[i + 1] < floor) continue;
        lx.push_back(std::log(errs[i]));
        ly.push_back(std::log(errs[i + 1]));
    }
    if (lx.size() < 2) throw InsufficientData("empirical_order: too few usable error pairs");

    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(lx.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw InsufficientData("empirical_order: degenerate error sequence");
    return sxy / sxx;
}

Vector refine_solution(const Problem& p, double epsilon, int max_iter) {
    if (!p.known_solution)
        throw DomainError("refine_solution: problem has no known solution");
    SolveConfig config;
    config.epsilon = epsilon;
    config.max_iter = max_iter;
    IterationTrace trace = solve(p, *p.known_solution, Method::GNK, config);
    if (trace.status == SolveStatus::Converged) return trace.final_iterate();
    if (trace.grad_norms.empty())
        throw InsufficientData("refine_solution: no completed steps");
    std::size_t best = 0;
    for (std::size_t i = 1; i < trace.grad_norms.size(); ++i)
        if (trace.grad_norms[i] < trace.grad_norms[best]) best = i;
    // grad_norms[i] belongs to the iterate produced by step i+1.
    return trace.iterates[best + 2];
}

}  // namespace gnk
