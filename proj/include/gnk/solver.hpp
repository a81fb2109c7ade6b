#pragma once

#include <string_view>
#include <vector>

#include "gnk/problem.hpp"

namespace gnk {

// Choice of step operator A_n; each method solves min ‖A_n·δ - (F+G)(x_n)‖
// and sets x_{n+1} = x_n - δ.
//
//   GNK: A_n = F'(x_n) + dd_G(2x_n - x_{n-1}, x_{n-1})
//   GNS: A_n = F'(x_n) + dd_G(x_n, x_{n-1})
//   SEC: A_n = dd_F(x_n, x_{n-1}) + dd_G(x_n, x_{n-1})
//   KUR: A_n = dd_F(2x_n - x_{n-1}, x_{n-1}) + dd_G(2x_n - x_{n-1}, x_{n-1})
enum class Method { GNK, GNS, SEC, KUR };

// Residual index used by the gradient half of the stopping test.
enum class StopIndex { NewIterate, OldIterate };

enum class SolveStatus { Converged, MaxIterations, Breakdown, NonFinite };

const char* to_string(Method m);
const char* to_string(SolveStatus s);
Method method_from_string(std::string_view name);  // accepts gnk|gns|sec|kur

struct SolveConfig {
    double epsilon = 1e-8;
    int max_iter = 100;
    // x_{-1} = x_0 - offset in every coordinate.
    double x_minus1_offset = 1e-4;
    StopIndex stop_index = StopIndex::NewIterate;
    DDPolicy dd_policy;
};

// Full history of one solve. iterates[0] is the auxiliary point x_{-1} and
// iterates[1] is x_0; step_norms and grad_norms hold one entry per completed
// step.
struct IterationTrace {
    std::vector<Vector> iterates;
    std::vector<double> step_norms;  // ‖x_{n+1} - x_n‖
    std::vector<double> grad_norms;  // ‖A_nᵀ(F+G)‖ at the stop index
    SolveStatus status = SolveStatus::MaxIterations;
    int iterations = 0;

    const Vector& final_iterate() const { return iterates.back(); }
};

// The m x n operator A_n for one step of the given method.
Matrix assemble_operator(const Problem& p, const Vector& x_n, const Vector& x_prev,
                         Method method, const DDPolicy& policy = {});

// Iterates until ‖x_{n+1} - x_n‖ <= epsilon and ‖A_nᵀ(F+G)‖ <= epsilon, both
// in the Euclidean norm, or until a failure status applies. Solve failures
// are reported through IterationTrace::status, never thrown.
IterationTrace solve(const Problem& p, const Vector& x0, Method method,
                     const SolveConfig& config = {});

// Slope of the least-squares fit of log e_{n+1} against log e_n, where
// e_n = ‖x_n - x_star‖ and entries with e_n below 100 machine epsilons are
// dropped. Throws InsufficientData when fewer than two usable pairs remain.
double empirical_order(const IterationTrace& trace, const Vector& x_star);

// Tightens a problem's known solution by running GNK from it. Returns the
// final iterate on convergence, otherwise the iterate with the smallest
// recorded gradient norm; for problems with nonzero residual the result is
// reliable only down to the divided-difference noise floor (about 1e-9).
Vector refine_solution(const Problem& p, double epsilon = 1e-14, int max_iter = 200);

}  // namespace gnk
