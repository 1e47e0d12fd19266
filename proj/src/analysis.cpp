#include "quadlsq/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "quadlsq/errors.hpp"
#include "quadlsq/kernels.hpp"

namespace quadlsq {

double rule_angle_radians(std::span<const double> omega, std::span<const double> z_star) {
    assert(omega.size() == z_star.size());
    const DoubleDouble ww = kernels::dot2(omega, omega);
    const DoubleDouble zz = kernels::dot2(z_star, z_star);
    if (ww.hi == 0.0 || zz.hi == 0.0) throw NumericalError("zero vector");
    const DoubleDouble wz = abs(kernels::dot2(omega, z_star));
    DoubleDouble cosine = wz / sqrt(ww * zz);
    if (DoubleDouble(1.0) < cosine) cosine = 1.0;
    // arccos(c) = 2 asin(sqrt((1 - c) / 2)); 1 - c is exact enough in double-double.
    const double half_gap = std::max(0.0, ((DoubleDouble(1.0) - cosine) * 0.5).to_double());
    return 2.0 * std::asin(std::sqrt(half_gap));
}

double rule_angle(std::span<const double> omega, std::span<const double> z_star) {
    return rule_angle_radians(omega, z_star) * (180.0 / std::numbers::pi);
}

NormParams norm_params(std::span<const double> omega, std::span<const double> z_star) {
    return {pnorm(omega, 1.0), pnorm(z_star, 1.0)};
}

ErrorCoefficient error_coefficient(double mu_Q, int degree) {
    assert(degree >= 0);
    if (mu_Q == 0.0) return {0.0, 0.0};
    const int m = degree + 1;
    double alpha;
    if (m <= 20) {
        double factorial = 1.0;
        for (int k = 2; k <= m; ++k) factorial *= k;
        alpha = mu_Q / factorial;
    } else {
        const double log_mag = std::log(std::abs(mu_Q)) - std::lgamma(static_cast<double>(m) + 1.0);
        alpha = std::copysign(std::exp(log_mag), mu_Q);
    }
    return {alpha, alpha};
}

ConditioningBounds bounds_omega_gamma(const FundamentalSystem& fs, const RuleSolution& sol) {
    const double n = static_cast<double>(fs.n);
    const double tau_1 = pnorm(sol.tau, 1.0);
    const double tau_inf = pnorm(sol.tau, kInfNorm);
    const double a_inf = norm_inf(fs.A);
    const double a_inv_inf = norm_inf(to_doubles(invert_upper(fs.A_ext)));

    ConditioningBounds b;
    b.Omega = norm_1(fs.A) * tau_1 / std::sqrt(n);
    b.Gamma = tau_inf * a_inf / std::abs(fs.mu_Q);
    b.cond_inf_A = a_inf * a_inv_inf;
    return b;
}

RuleAnalysis analyze_rule(std::string family, const NodeSet& ns, const DegreeTolerance& tol) {
    const CanonicalBasis cb = build_basis(ns);
    FundamentalSystem fs = build_system(ns, cb, tol);
    RuleSolution sol = solve_rule(fs);

    RuleReport rep;
    rep.family = std::move(family);
    rep.n = static_cast<int>(fs.n);
    rep.degree = fs.degree;
    rep.mu_Q = fs.mu_Q;
    const NormParams np = norm_params(sol.omega, sol.z_star);
    rep.N_omega = np.N_omega;
    rep.N_z = np.N_z;
    rep.angle_deg = rule_angle(sol.omega, sol.z_star);
    rep.tau_inf = pnorm(sol.tau, kInfNorm);
    const ErrorCoefficient ec = error_coefficient(fs.mu_Q, fs.degree);
    rep.alpha = ec.alpha;
    rep.c_n = ec.c_n;
    const ConditioningBounds cbnd = bounds_omega_gamma(fs, sol);
    rep.Omega = cbnd.Omega;
    rep.Gamma = cbnd.Gamma;
    rep.cond_inf_A = cbnd.cond_inf_A;
    rep.residual_norms = residual_norms(residual(fs, std::span<const DoubleDouble>(sol.omega_ext)));
    rep.r_z_inf = pnorm(residual(fs, std::span<const DoubleDouble>(sol.z_star_ext)), kInfNorm);

    return {ns, std::move(fs), std::move(sol), std::move(rep)};
}

}  // namespace quadlsq
