#pragma once

#include <map>
#include <span>
#include <string>

#include "quadlsq/basis.hpp"
#include "quadlsq/minimax.hpp"
#include "quadlsq/system.hpp"

namespace quadlsq {

/// arccos(|<z, w>| / (||z||_2 ||w||_2)) in radians. The cosine is formed
/// with compensated dot products, clamped to [-1, 1], and the arccos is
/// evaluated through the half-angle form so angles near zero keep their
/// digits. Throws NumericalError("zero vector") if either norm vanishes.
[[nodiscard]] double rule_angle_radians(std::span<const double> omega, std::span<const double> z_star);
/// Same angle in degrees.
[[nodiscard]] double rule_angle(std::span<const double> omega, std::span<const double> z_star);

struct NormParams {
    double N_omega = 0.0;  ///< ||omega||_1
    double N_z = 0.0;      ///< ||z*||_1
};

[[nodiscard]] NormParams norm_params(std::span<const double> omega, std::span<const double> z_star);

struct ErrorCoefficient {
    double alpha = 0.0;  ///< mu_Q / (d+1)!
    double c_n = 0.0;    ///< the constant in E(f) = c_n f^{(d+1)}(xi); equal to alpha
};

/// mu_Q / (d+1)!, through log-gamma once (d+1)! leaves the exactly
/// representable range.
[[nodiscard]] ErrorCoefficient error_coefficient(double mu_Q, int degree);

struct ConditioningBounds {
    double Omega = 0.0;       ///< ||A||_1 ||omega - z*||_1 / sqrt(n), bounds |mu_Q| from above
    double Gamma = 0.0;       ///< ||z* - omega||_inf ||A||_inf / |mu_Q|, in [1, cond_inf(A)]
    double cond_inf_A = 0.0;  ///< ||A||_inf ||A^{-1}||_inf with the inverse formed explicitly
};

[[nodiscard]] ConditioningBounds bounds_omega_gamma(const FundamentalSystem& fs, const RuleSolution& sol);

/// Every scalar diagnostic for one rule.
struct RuleReport {
    std::string family;
    int n = 0;
    int degree = 0;
    double mu_Q = 0.0;
    double N_omega = 0.0;
    double N_z = 0.0;
    double angle_deg = 0.0;
    double tau_inf = 0.0;
    double alpha = 0.0;
    double c_n = 0.0;
    double Omega = 0.0;
    double Gamma = 0.0;
    double cond_inf_A = 0.0;
    std::map<double, double> residual_norms;  ///< ||r(omega)||_p keyed by p
    double r_z_inf = 0.0;                     ///< ||r(z*)||_inf
};

struct RuleAnalysis {
    NodeSet nodes;
    FundamentalSystem system;
    RuleSolution solution;
    RuleReport report;
};

/// Whole pipeline: basis, fundamental system, weights, minimax solution and
/// diagnostics.
[[nodiscard]] RuleAnalysis analyze_rule(std::string family, const NodeSet& ns, const DegreeTolerance& tol = {});

}  // namespace quadlsq
