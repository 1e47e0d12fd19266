#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "quadlsq/dd.hpp"

namespace quadlsq {

/// Integration limits for I(f) = \int_a^b f(x) dx. The weight function is
/// fixed to w(x) = 1.
struct Interval {
    double a = -1.0;
    double b = 1.0;

    /// Throws InputError unless a < b and both are finite.
    static Interval make(double a, double b);

    [[nodiscard]] bool is_reference() const { return a == -1.0 && b == 1.0; }
    bool operator==(const Interval&) const = default;
};

/// Dense polynomial in the monomial basis, lowest degree first, with
/// double-double coefficients. Immutable; trailing zeros are trimmed so the
/// zero polynomial is stored as the single coefficient 0.
class Polynomial {
public:
    Polynomial();
    explicit Polynomial(std::vector<DoubleDouble> coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    static Polynomial from_doubles(std::span<const double> coeffs);

    [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == DoubleDouble{}; }
    [[nodiscard]] std::span<const DoubleDouble> coefficients() const { return coeffs_; }
    /// Coefficient of x^k rounded to double; 0 past the degree.
    [[nodiscard]] double coefficient(std::size_t k) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(double s, const Polynomial& p);

private:
    std::vector<DoubleDouble> coeffs_;
};

/// p(x) * (x - root).
[[nodiscard]] Polynomial mul_linear(const Polynomial& p, double root);

/// Horner evaluation carried in double-double, rounded once at the end.
[[nodiscard]] double eval(const Polynomial& p, double x);
[[nodiscard]] DoubleDouble eval_extended(const Polynomial& p, double x);
/// out[i] = p(xs[i]) through the vectorized Horner kernel.
void eval_many(const Polynomial& p, std::span<const double> xs, std::span<DoubleDouble> out);

/// \int_a^b p(x) dx = sum_k c_k (b^{k+1} - a^{k+1}) / (k+1), accumulated in
/// double-double. On (-1, 1) odd powers contribute exactly zero.
[[nodiscard]] double integrate(const Polynomial& p, const Interval& iv = {});
[[nodiscard]] DoubleDouble integrate_extended(const Polynomial& p, const Interval& iv = {});

}  // namespace quadlsq
