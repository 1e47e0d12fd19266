#pragma once

#include <span>

#include "quadlsq/system.hpp"

namespace quadlsq {

/// tau solving A tau = |mu_Q| v with v = (1, ..., 1).
[[nodiscard]] ExtVector solve_tau_extended(const FundamentalSystem& fs);
[[nodiscard]] Vector solve_tau(const FundamentalSystem& fs);

/// z* = omega + tau. The result satisfies A z* - |mu_Q| v = c.
[[nodiscard]] Vector minimax_solution(const FundamentalSystem& fs, std::span<const double> omega);
[[nodiscard]] ExtVector minimax_solution(const FundamentalSystem& fs, std::span<const DoubleDouble> omega);

/// Weights, correction and minimax solution in one pass.
[[nodiscard]] RuleSolution solve_rule(const FundamentalSystem& fs);

/// epsilon = ||r(omega)||_2^2 / ||r(omega)||_1 for the least-squares
/// solution omega. For a fundamental system this must equal |mu_Q|; a
/// relative mismatch above 1e-10 throws NumericalError, since it can only
/// come from a broken residual.
[[nodiscard]] double epsilon_check(const FundamentalSystem& fs, std::span<const double> omega);
[[nodiscard]] double epsilon_check(const FundamentalSystem& fs, std::span<const DoubleDouble> omega);

/// r(z*). Rows 1..n equal +|mu_Q| (sign(0) = 1 convention) and row n+1
/// equals -mu_Q.
[[nodiscard]] Vector equioscillation_residual(const FundamentalSystem& fs, std::span<const double> z_star);
[[nodiscard]] Vector equioscillation_residual(const FundamentalSystem& fs, std::span<const DoubleDouble> z_star);

}  // namespace quadlsq
