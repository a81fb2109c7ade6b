#include "gnk/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace gnk {

namespace {

constexpr double kBracketLimit = 1e12;

void validate(const LipschitzConstants& c) {
    if (!(c.B > 0.0)) throw DomainError("LipschitzConstants: B must be positive");
    const double vals[] = {c.alpha, c.eta, c.L0, c.M0, c.N0, c.L, c.M, c.N, c.L1};
    for (double v : vals)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DomainError("LipschitzConstants: constants must be finite and nonnegative");
}

// phi(r) = alpha + (L+2M)r + 4Nr², the operator-norm envelope near the
// solution.
double phi(double r, const LipschitzConstants& c) {
    return c.alpha + (c.L + 2.0 * c.M) * r + 4.0 * c.N * r * r;
}

// S(r), the perturbation product controlling the normal-matrix inverse.
double s_product(double r, const LipschitzConstants& c) {
    const double grow = (c.L0 + 2.0 * c.M0) * r + 4.0 * c.N0 * r * r;
    return (2.0 * c.alpha + grow) * grow;
}

// Smallest positive root of a nondecreasing f with f(0) < 0: double the
// bracket, then bisect to the last representable interval.
std::optional<double> bracketed_root(const std::function<double(double)>& f) {
    double lo = 0.0;
    double hi = 1.0;
    while (f(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > kBracketLimit) return std::nullopt;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double h_function(double t, const LipschitzConstants& c) {
    validate(c);
    if (!(t >= 0.0)) throw DomainError("h_function: t must be nonnegative");
    const double first = 2.0 * c.alpha + (c.L0 + 2.0 * c.M0) * t + c.N0 * t * t;
    const double second = (0.5 * c.L0 + c.M0) * t + c.N0 * t * t;
    return c.B * first * second;
}

std::optional<double> gamma_root(const LipschitzConstants& c) {
    validate(c);
    return bracketed_root([&](double t) { return h_function(t, c) - 1.0; });
}

double q_function(double r, const LipschitzConstants& c) {
    validate(c);
    if (!(r >= 0.0)) throw DomainError("q_function: r must be nonnegative");
    const double psi = (0.5 * c.L + c.M) * r + 4.0 * c.N * r * r;
    const double first = phi(r, c) * psi + (c.L + 2.0 * c.M + 4.0 * c.N * r) * c.eta;
    return c.B * first + c.B * s_product(r, c) - 1.0;
}

bool condition15_holds(const LipschitzConstants& c) {
    validate(c);
    return c.B * (c.L + 2.0 * c.M) * c.eta < 1.0;
}

std::optional<double> r_star(const LipschitzConstants& c) {
    if (!condition15_holds(c)) return std::nullopt;
    return bracketed_root([&](double r) { return q_function(r, c); });
}

double g_function(double r, const LipschitzConstants& c) {
    validate(c);
    if (!(r >= 0.0)) throw DomainError("g_function: r must be nonnegative");
    const double denom = 1.0 - c.B * s_product(r, c);
    if (!(denom > 0.0))
        throw BracketNonpositive("g_function: 1 - B*S(r) is not positive");
    return c.B / denom;
}

double p_function(double r, const LipschitzConstants& c) {
    const double psi = (0.5 * c.L + c.M) * r + 4.0 * c.N * r * r;
    const double first = phi(r, c) * psi + (c.L + 2.0 * c.M + 4.0 * c.N * r) * c.eta;
    return g_function(r, c) * first;
}

ErrorConstants error_constants(const LipschitzConstants& c, double r_star_value) {
    if (!(r_star_value >= 0.0))
        throw DomainError("error_constants: r_star must be nonnegative");
    ErrorConstants e;
    e.g = g_function(r_star_value, c);
    const double ph = phi(r_star_value, c);
    e.C1 = e.g * (c.L + 2.0 * c.M) * c.eta;
    e.C2 = e.g * c.N * c.eta;
    e.C3 = e.g * (0.5 * c.L + c.M) * ph;
    e.C4 = e.g * c.N * ph;
    return e;
}

AB ab_functions(double r, const LipschitzConstants& c) {
    const double g = g_function(r, c);
    const double psi = (0.5 * c.L + c.M) * r + 4.0 * c.N * r * r;
    AB ab;
    ab.a = g * ((c.L + 2.0 * c.M + 3.0 * c.N * r) * c.eta + phi(r, c) * psi);
    ab.b = g * c.N * r * c.eta;
    return ab;
}

MajorantRoots majorant_roots(double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0))
        throw DomainError("majorant_roots: coefficients must be nonnegative");
    const double sq = std::sqrt(a * a + 4.0 * b);
    return {0.5 * (a - sq), 0.5 * (a + sq)};
}

std::vector<double> majorant_sequence(double a, double b, double rho_minus1,
                                      double rho_0, int n_max) {
    if (!(a >= 0.0) || !(b >= 0.0) || !(a + b < 1.0))
        throw DomainError("majorant_sequence: need a, b >= 0 and a + b < 1");
    if (!(rho_minus1 >= 0.0) || !(rho_0 >= 0.0))
        throw DomainError("majorant_sequence: seeds must be nonnegative");
    if (n_max < 0) throw DomainError("majorant_sequence: n_max must be nonnegative");

    std::vector<double> rho;
    rho.reserve(static_cast<std::size_t>(n_max) + 2);
    rho.push_back(rho_minus1);
    rho.push_back(rho_0);
    if (a == 0.0 && b == 0.0) {
        for (int n = 1; n <= n_max; ++n) rho.push_back(0.0);
        return rho;
    }

    const auto [l1, l2] = majorant_roots(a, b);
    if (l1 == l2) throw DegenerateRoots("majorant_sequence: coincident characteristic roots");
    // Weights in the lambda form, which stays finite when b = 0 makes
    // lambda1 vanish.
    const double w1 = -(b * rho_minus1 + l1 * rho_0) / (l2 - l1);
    const double w2 = (b * rho_minus1 + l2 * rho_0) / (l2 - l1);
    double p1 = 1.0;  // lambda1^(n-1)
    double p2 = 1.0;  // lambda2^(n-1)
    for (int n = 1; n <= n_max; ++n) {
        rho.push_back(w1 * p1 * l1 + w2 * p2 * l2);
        p1 *= l1;
        p2 *= l2;
    }
    return rho;
}

LipschitzConstants prior_constants(const LipschitzConstants& c) {
    validate(c);
    LipschitzConstants p = c;
    p.L0 = c.L1;
    p.L = c.L1;
    p.M = c.M0;
    p.N = c.N0;
    return p;
}

RadiiComparison compare_radii(const LipschitzConstants& c) {
    return {r_star(c), r_star(prior_constants(c))};
}

RadiusReport radius_report(const LipschitzConstants& c) {
    validate(c);
    RadiusReport rep;
    rep.constants = c;
    rep.condition15 = condition15_holds(c);

    rep.gamma = gamma_root(c);
    if (!rep.gamma) rep.gamma_reason = "no_bracket";

    if (!rep.condition15) {
        rep.r_star_reason = "condition15_violated";
    } else {
        rep.r_star = r_star(c);
        if (!rep.r_star) rep.r_star_reason = "no_bracket";
    }

    const LipschitzConstants prior = prior_constants(c);
    if (!condition15_holds(prior)) {
        rep.r_star_prior_reason = "condition15_violated";
    } else {
        rep.r_star_prior = r_star(prior);
        if (!rep.r_star_prior) rep.r_star_prior_reason = "no_bracket";
    }

    if (rep.r_star) {
        try {
            const ErrorConstants e = error_constants(c, *rep.r_star);
            rep.g_at_rstar = e.g;
            rep.c1 = e.C1;
            rep.c2 = e.C2;
            rep.c3 = e.C3;
            rep.c4 = e.C4;
            const AB ab = ab_functions(*rep.r_star, c);
            rep.a_at_rstar = ab.a;
            rep.b_at_rstar = ab.b;
        } catch (const BracketNonpositive&) {
            // Leave the derived fields absent; r_star itself is still reported.
        }
    }
    return rep;
}

namespace {

// Worst-case quotient helpers for estimate_constants.

double jac_ratio(const Problem& p, const Vector& x, const Vector& y) {
    const double d = norm2(sub(x, y));
    if (d < 1e-12) return 0.0;
    return spectral_norm(sub(p.jacobian_F(x), p.jacobian_F(y))) / d;
}

double dd_pair_ratio(const Problem& p, const DDPolicy& policy, const Vector& x,
                     const Vector& y, const Vector& u, const Vector& v) {
    const double d = norm2(sub(x, u)) + norm2(sub(y, v));
    if (d < 1e-12) return 0.0;
    const Matrix a = divided_difference(p.G, x, y, policy);
    const Matrix b = divided_difference(p.G, u, v, policy);
    return spectral_norm(sub(a, b)) / d;
}

}  // namespace

LipschitzConstants estimate_constants(const Problem& p, const Vector& x_star,
                                      double radius, int samples, unsigned seed,
                                      double n_fallback) {
    if (x_star.size() != p.n)
        throw DimensionMismatch("estimate_constants: x_star has wrong dimension");
    if (!(radius > 0.0)) throw DomainError("estimate_constants: radius must be positive");
    if (samples < 4) throw DomainError("estimate_constants: need at least 4 samples");

    const DDPolicy policy;
    const Matrix a_star =
        add(p.jacobian_F(x_star), divided_difference(p.G, x_star, x_star, policy));
    Matrix inv;
    try {
        inv = invert(matmul(transpose(a_star), a_star));
    } catch (const RankDeficient&) {
        throw SingularAtSolution("estimate_constants: normal matrix is singular at x_star");
    }

    LipschitzConstants c;
    c.B = spectral_norm(inv);
    c.alpha = spectral_norm(a_star);
    c.eta = norm2(residual(p, x_star));

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto draw = [&](double rad) {
        Vector dir(p.n);
        double dn = 0.0;
        do {
            for (auto& d : dir) d = gauss(rng);
            dn = norm2(dir);
        } while (dn == 0.0);
        const double u = std::pow(unif(rng), 1.0 / static_cast<double>(p.n));
        Vector pt(p.n);
        for (std::size_t i = 0; i < p.n; ++i) pt[i] = x_star[i] + rad * u * dir[i] / dn;
        return pt;
    };

    const auto scan = [&](double rad, double& l_centered, double& l_pair, double& m_pair,
                          double& n_defect, bool& n_seen) {
        std::vector<Vector> pts(static_cast<std::size_t>(samples));
        for (auto& pt : pts) pt = draw(rad);

        for (const auto& pt : pts)
            l_centered = std::max(l_centered, jac_ratio(p, pt, x_star));
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            l_pair = std::max(l_pair, jac_ratio(p, pts[i], pts[i + 1]));
        for (std::size_t i = 0; i + 3 < pts.size(); i += 2)
            m_pair = std::max(
                m_pair, dd_pair_ratio(p, policy, pts[i], pts[i + 1], pts[i + 2], pts[i + 3]));
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            m_pair = std::max(m_pair,
                              dd_pair_ratio(p, policy, pts[i], pts[i + 1], x_star, x_star));

        // Defect of the centered pair against the coincident one; the probe
        // points are pulled toward x_star so 2z - w stays inside the ball.
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
            Vector z(p.n);
            Vector w(p.n);
            for (std::size_t j = 0; j < p.n; ++j) {
                z[j] = x_star[j] + (pts[i][j] - x_star[j]) / 3.0;
                w[j] = x_star[j] + (pts[i + 1][j] - x_star[j]) / 3.0;
            }
            const double d = norm2(sub(z, w));
            if (d < 1e-3 * rad || d < 1e-8) continue;  // quotient would amplify noise
            const auto [lead, trail] = kurchatov_points(z, w);
            const Matrix dk = divided_difference(p.G, lead, trail, policy);
            const Matrix dc = divided_difference(p.G, z, z, policy);
            n_defect = std::max(n_defect, spectral_norm(sub(dk, dc)) / (d * d));
            n_seen = true;
        }
    };

    double l_centered = 0.0;
    double l_pair = 0.0;
    double m_pair = 0.0;
    double n_defect = 0.0;
    bool n_seen = false;
    scan(radius, l_centered, l_pair, m_pair, n_defect, n_seen);
    c.L0 = l_centered;
    c.L1 = std::max(l_pair, l_centered);
    c.M0 = m_pair;
    c.N0 = n_seen ? n_defect : n_fallback;

    // Restricted pass over the ball cut down by the gamma root, which only
    // depends on the constants already fixed above.
    double r0 = radius;
    if (const auto gamma = gamma_root(c)) r0 = std::min(radius, *gamma);
    double l_centered0 = 0.0;
    double l_pair0 = 0.0;
    double m_pair0 = 0.0;
    double n_defect0 = 0.0;
    bool n_seen0 = false;
    scan(r0, l_centered0, l_pair0, m_pair0, n_defect0, n_seen0);
    c.L = std::min(std::max(l_pair0, l_centered0), c.L1);
    c.M = std::min(m_pair0, c.M0);
    c.N = n_seen0 ? std::min(n_defect0, c.N0) : std::min(n_fallback, c.N0);
    return c;
}

}  // namespace gnk
