#include "quadlsq/minimax.hpp"

#include <cassert>
#include <cmath>

#include "quadlsq/errors.hpp"

namespace quadlsq {

ExtVector solve_tau_extended(const FundamentalSystem& fs) {
    const ExtVector rhs(fs.n, abs(fs.mu_Q_ext));
    return solve_upper(fs.A_ext, rhs);
}

Vector solve_tau(const FundamentalSystem& fs) { return to_doubles(solve_tau_extended(fs)); }

ExtVector minimax_solution(const FundamentalSystem& fs, std::span<const DoubleDouble> omega) {
    assert(omega.size() == fs.n);
    ExtVector z = solve_tau_extended(fs);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = omega[i] + z[i];
    return z;
}

Vector minimax_solution(const FundamentalSystem& fs, std::span<const double> omega) {
    return to_doubles(minimax_solution(fs, to_extended(omega)));
}

RuleSolution solve_rule(const FundamentalSystem& fs) {
    RuleSolution s;
    s.omega_ext = solve_weights_extended(fs);
    s.tau_ext = solve_tau_extended(fs);
    s.z_star_ext.resize(fs.n);
    for (std::size_t i = 0; i < fs.n; ++i) s.z_star_ext[i] = s.omega_ext[i] + s.tau_ext[i];
    s.omega = to_doubles(s.omega_ext);
    s.tau = to_doubles(s.tau_ext);
    s.z_star = to_doubles(s.z_star_ext);
    return s;
}

double epsilon_check(const FundamentalSystem& fs, std::span<const DoubleDouble> omega) {
    const Vector r = residual(fs, omega);
    const double l1 = pnorm(r, 1.0);
    const double l2 = pnorm(r, 2.0);
    const double eps = l1 == 0.0 ? 0.0 : (l2 / l1) * l2;
    const double expected = std::abs(fs.mu_Q);
    if (std::abs(eps - expected) > 1e-10 * expected)
        throw NumericalError("epsilon mismatch: ||r||_2^2/||r||_1 differs from |mu_Q|");
    return eps;
}

double epsilon_check(const FundamentalSystem& fs, std::span<const double> omega) {
    return epsilon_check(fs, to_extended(omega));
}

Vector equioscillation_residual(const FundamentalSystem& fs, std::span<const DoubleDouble> z_star) {
    return residual(fs, z_star);
}

Vector equioscillation_residual(const FundamentalSystem& fs, std::span<const double> z_star) {
    return residual(fs, z_star);
}

}  // namespace quadlsq
