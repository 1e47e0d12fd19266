#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>

#include "quadlsq/basis.hpp"
#include "quadlsq/linalg.hpp"

namespace quadlsq {

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

/// Zero threshold for the extended moments: a moment counts as nonzero when
/// its magnitude exceeds `absolute` if set, else relative * max(1, |mu_0|).
struct DegreeTolerance {
    double relative = 1e-12;
    std::optional<double> absolute;

    [[nodiscard]] double threshold(double mu0) const;
};

struct DegreeInfo {
    int degree = 0;    ///< d, with n-1 <= d <= 2n-1
    double mu_Q = 0;   ///< principal moment mu_{d+1} = I(q_{d+1})
};

/// The (n+1) x n system F w = c~ produced by undetermined coefficients on
/// the canonical basis. Row 0 is all ones, row i holds phi_i(t_j) for j >= i,
/// and the last row is zero with right-hand side mu_Q. A and c are the top
/// n rows. The *_ext members carry the same data in double-double and are
/// what the solvers and residual formation consume.
struct FundamentalSystem {
    std::size_t n = 0;
    Interval interval;
    Matrix<double> F;
    Vector c_tilde;
    Matrix<double> A;
    Vector c;
    Vector moments;  ///< mu_0 .. mu_{2n}: canonical moments, then every extended moment
    double mu_Q = 0.0;
    int degree = 0;

    Matrix<DoubleDouble> A_ext;
    ExtVector c_ext;
    ExtVector moments_ext;
    DoubleDouble mu_Q_ext;
};

/// Least-squares weights, minimax solution and the correction between them.
/// The double vectors are roundings of the *_ext ones; z_star_ext is
/// computed as omega_ext + tau_ext.
struct RuleSolution {
    Vector omega;
    Vector z_star;
    Vector tau;

    ExtVector omega_ext;
    ExtVector z_star_ext;
    ExtVector tau_ext;
};

/// Smallest j >= n with |I(q_j)| above the tolerance gives d = j - 1 and
/// mu_Q = I(q_j). Throws NumericalError("degree overflow") if every
/// extended moment up to q_{2n} is below the threshold.
[[nodiscard]] DegreeInfo detect_degree(const NodeSet& ns, const CanonicalBasis& cb, const DegreeTolerance& tol = {});

[[nodiscard]] FundamentalSystem build_system(const NodeSet& ns, const CanonicalBasis& cb,
                                             const DegreeTolerance& tol = {});

/// Backward substitution on A w = c. The result is the unique solution of
/// the triangular block and the least-squares solution of F w = c~.
[[nodiscard]] Vector solve_weights(const FundamentalSystem& fs);
[[nodiscard]] ExtVector solve_weights_extended(const FundamentalSystem& fs);

/// r(x) = F x - c~ (length n+1), formed in double-double and rounded.
[[nodiscard]] Vector residual(const FundamentalSystem& fs, std::span<const double> x);
[[nodiscard]] Vector residual(const FundamentalSystem& fs, std::span<const DoubleDouble> x);

/// ||r||_p for real p >= 1 or p = kInfNorm. Scaled by max|r_i| so tiny
/// residuals neither underflow nor lose digits.
[[nodiscard]] double pnorm(std::span<const double> r, double p);

inline constexpr double kDefaultNormOrders[] = {1.0, 2.0, 3.0, kInfNorm};

[[nodiscard]] std::map<double, double> residual_norms(std::span<const double> r,
                                                      std::span<const double> orders = kDefaultNormOrders);

}  // namespace quadlsq
