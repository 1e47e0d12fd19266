#pragma once

// Independent verification paths. None of these feed the production
// pipeline; tests and the acceptance suite compare them against it.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quadlsq/basis.hpp"
#include "quadlsq/system.hpp"

namespace quadlsq::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Solves F^T F y = F^T c~ by Gaussian elimination with partial pivoting in
/// long double. Squares the conditioning of A, so agreement with the
/// triangular route is only expected to ~1e-8 for n <= 12.
/// Throws NumericalError("numerically singular") on a pivot below 1e-30.
[[nodiscard]] Vector lsq_normal_equations(const FundamentalSystem& fs);

/// Largest d <= 2n with |Q(x^k) - \int x^k| within the degree tolerance for
/// every k <= d. Returns -1 if even constants are integrated wrongly.
[[nodiscard]] int degree_by_monomials(const NodeSet& ns, std::span<const double> weights,
                                      const DegreeTolerance& tol = {});

struct DirectMinimax {
    Vector z;
    double eps = 0.0;
};

/// Solves r_i(z) = sigma_i eps directly as an (n+1) x (n+1) system in
/// (z, eps), sigma = (1, ..., 1, -sign(mu_Q)), by pivoted elimination.
[[nodiscard]] DirectMinimax direct_minimax(const FundamentalSystem& fs);

/// "3/8", "-0.125", "1e-3", "2". Throws InputError("irrational nodes")
/// when the reduced numerator or denominator reaches 2^63.
[[nodiscard]] Rational parse_rational(std::string_view text);
[[nodiscard]] Rational make_rational(std::int64_t num, std::int64_t den);
/// The exact binary value of a finite double.
[[nodiscard]] Rational rational_from_double(double x);
/// The simplest rational with denominator <= max_den that rounds to x,
/// or InputError("irrational nodes") if there is none. The bound stays far
/// below 2^26: past that, some convergent of every double lands inside its
/// half-ulp interval.
[[nodiscard]] Rational recover_rational(double x, std::uint64_t max_den = std::uint64_t{1} << 20);

struct RationalRule {
    std::vector<Rational> nodes;
    Rational a, b;
    std::vector<std::vector<Rational>> A;  ///< upper-triangular block, row-major
    std::vector<Rational> c;
    std::vector<Rational> moments;  ///< mu_0 .. mu_{2n}
    std::vector<Rational> weights;
    std::vector<Rational> tau;
    std::vector<Rational> z_star;
    Rational mu_Q;
    int degree = 0;
};

/// Basis, system, weights, degree and minimax correction in exact
/// arithmetic; the degree test is exact zero. Nodes must be strictly
/// increasing.
[[nodiscard]] RationalRule rational_pipeline(std::span<const Rational> nodes, const Rational& a = Rational(-1),
                                             const Rational& b = Rational(1));
/// Recovers small-denominator rationals from the doubles first (see
/// recover_rational); Fejer and Gauss-Legendre nodes fail with
/// InputError("irrational nodes").
[[nodiscard]] RationalRule rational_pipeline(const NodeSet& ns);

[[nodiscard]] inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace quadlsq::oracle
