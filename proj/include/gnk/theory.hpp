#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnk/problem.hpp"

namespace gnk {

// Constant family of the local convergence analysis. B bounds ‖(A*ᵀA*)⁻¹‖
// at the solution, alpha bounds ‖A*‖, and eta the residual norm there. The
// 0-subscripted constants hold on the full domain, the bare ones on the
// neighborhood cut out by the gamma root, and L1 is the unrestricted
// Lipschitz constant of the Jacobian (L <= L1, M <= M0, N <= N0).
struct LipschitzConstants {
    double B = 1.0;
    double alpha = 0.0;
    double eta = 0.0;
    double L0 = 0.0;
    double M0 = 0.0;
    double N0 = 0.0;
    double L = 0.0;
    double M = 0.0;
    double N = 0.0;
    double L1 = 0.0;
};

// h(t) = B·[2·alpha + (L0 + 2M0)·t + N0·t²]·[(L0/2 + M0)·t + N0·t²].
double h_function(double t, const LipschitzConstants& c);

// Smallest positive t with h(t) = 1, or nullopt when no bracket up to 1e12
// exists. Bisection to machine precision.
std::optional<double> gamma_root(const LipschitzConstants& c);

// q(r) = B·[(alpha + (L+2M)r + 4Nr²)·((L/2+M)r + 4Nr²) + (L+2M+4Nr)·eta]
//      + B·[2·alpha + (L0+2M0)r + 4N0r²]·[(L0+2M0)r + 4N0r²] - 1.
double q_function(double r, const LipschitzConstants& c);

// The smallness condition B·(L+2M)·eta < 1, required for q(0) < 0.
bool condition15_holds(const LipschitzConstants& c);

// Smallest positive root of q, or nullopt when the smallness condition
// fails or no bracket up to 1e12 exists.
std::optional<double> r_star(const LipschitzConstants& c);

// g(r) = B / (1 - B·[2·alpha + (L0+2M0)r + 4N0r²]·[(L0+2M0)r + 4N0r²]).
// Throws BracketNonpositive when the denominator is not positive.
double g_function(double r, const LipschitzConstants& c);

// p(r) = g(r)·[(alpha + (L+2M)r + 4Nr²)·((L/2+M)r + 4Nr²) + (L+2M+4Nr)·eta].
// Equals 1 at r = r_star.
double p_function(double r, const LipschitzConstants& c);

// Error-bound coefficients at r = r_star: the two linear terms scale with
// the residual bound eta and vanish with it, the two quadratic terms with
// the curvature of the model.
struct ErrorConstants {
    double g = 0.0;   // g(r_star)
    double C1 = 0.0;  // g·(L+2M)·eta
    double C2 = 0.0;  // g·N·eta
    double C3 = 0.0;  // g·(L/2+M)·phi(r_star)
    double C4 = 0.0;  // g·N·phi(r_star)
};
ErrorConstants error_constants(const LipschitzConstants& c, double r_star_value);

// Coefficients of the linearized error recurrence
// rho_{n+1} <= a·rho_n + b·rho_{n-1}; a(r*) + b(r*) = 1.
struct AB {
    double a = 0.0;
    double b = 0.0;
};
AB ab_functions(double r, const LipschitzConstants& c);

// Roots of lambda² - a·lambda - b, lambda1 <= lambda2; |lambda2| < 1
// whenever a + b < 1.
struct MajorantRoots {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};
MajorantRoots majorant_roots(double a, double b);

// Closed form of rho_{n+1} = a·rho_n + b·rho_{n-1}; returns
// rho_{-1}, ..., rho_{n_max} (n_max + 2 values).
std::vector<double> majorant_sequence(double a, double b, double rho_minus1,
                                      double rho_0, int n_max);

// The same family with every restricted constant replaced by its
// full-domain counterpart: (L0, L, M, N) -> (L1, L1, M0, N0).
LipschitzConstants prior_constants(const LipschitzConstants& c);

// Convergence radius of this analysis next to the one computed from the
// unrestricted constants alone. The prior radius never exceeds the current
// one and may fail to exist when the current one does.
struct RadiiComparison {
    std::optional<double> r_star;
    std::optional<double> r_star_prior;
};
RadiiComparison compare_radii(const LipschitzConstants& c);

// Everything the radius CLI reports. Absent roots carry a reason:
// "condition15_violated" or "no_bracket".
struct RadiusReport {
    LipschitzConstants constants;
    bool condition15 = false;
    std::optional<double> gamma;
    std::optional<double> r_star;
    std::optional<double> r_star_prior;
    std::string gamma_reason;
    std::string r_star_reason;
    std::string r_star_prior_reason;
    std::optional<double> g_at_rstar;
    std::optional<double> c1, c2, c3, c4;
    std::optional<double> a_at_rstar, b_at_rstar;
};
RadiusReport radius_report(const LipschitzConstants& c);

// Samples the problem in a ball of the given radius around x_star and takes
// worst-case difference quotients: L-family from Jacobian differences,
// M-family from divided-difference perturbations, N-family from the defect
// ‖dd_G(2z-w, w) - dd_G(z, z)‖ / ‖z-w‖². Restricted constants come from a
// second pass over the ball cut down to the gamma root of the first-pass
// constants. Deterministic for a fixed seed. n_fallback is used for the
// N-family when no sampled pair admits a quotient. Throws SingularAtSolution
// when the normal matrix at x_star cannot be inverted.
LipschitzConstants estimate_constants(const Problem& p, const Vector& x_star,
                                      double radius, int samples, unsigned seed,
                                      double n_fallback = 0.0);

}  // namespace gnk
