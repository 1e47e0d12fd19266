#include "quadlsq/poly.hpp"

#include <algorithm>
#include <cmath>

#include "quadlsq/errors.hpp"
#include "quadlsq/kernels.hpp"

namespace quadlsq {

Interval Interval::make(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) throw InputError("invalid interval: require a < b");
    return {a, b};
}

namespace {

void trim(std::vector<DoubleDouble>& c) {
    while (c.size() > 1 && c.back() == DoubleDouble{}) c.pop_back();
    if (c.empty()) c.emplace_back();
}

}  // namespace

Polynomial::Polynomial() : coeffs_(1) {}

Polynomial::Polynomial(std::vector<DoubleDouble> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { trim(coeffs_); }

Polynomial Polynomial::from_doubles(std::span<const double> coeffs) {
    return Polynomial(std::vector<DoubleDouble>(coeffs.begin(), coeffs.end()));
}

double Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k].to_double() : 0.0; }

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<DoubleDouble> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < p.coeffs_.size()) out[k] += p.coeffs_[k];
        if (k < q.coeffs_.size()) out[k] += q.coeffs_[k];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(double s, const Polynomial& p) {
    std::vector<DoubleDouble> out(p.coeffs_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeffs_[k] * s;
    return Polynomial(std::move(out));
}

Polynomial mul_linear(const Polynomial& p, double root) {
    const auto c = p.coefficients();
    std::vector<DoubleDouble> out(c.size() + 1);
    out[c.size()] = c.back();
    for (std::size_t k = c.size() - 1; k > 0; --k) out[k] = c[k - 1] - c[k] * root;
    out[0] = -(c[0] * root);
    if (p.is_zero()) return Polynomial();
    return Polynomial(std::move(out));
}

DoubleDouble eval_extended(const Polynomial& p, double x) {
    DoubleDouble out;
    kernels::scalar::horner_batch(p.coefficients(), std::span<const double>(&x, 1), std::span<DoubleDouble>(&out, 1));
    return out;
}

double eval(const Polynomial& p, double x) { return eval_extended(p, x).to_double(); }

void eval_many(const Polynomial& p, std::span<const double> xs, std::span<DoubleDouble> out) {
    kernels::horner_batch(p.coefficients(), xs, out);
}

DoubleDouble integrate_extended(const Polynomial& p, const Interval& iv) {
    const auto c = p.coefficients();
    DoubleDouble sum;
    if (iv.is_reference()) {
        for (std::size_t k = 0; k < c.size(); k += 2) sum += c[k] * 2.0 / static_cast<double>(k + 1);
        return sum;
    }
    DoubleDouble pow_a = iv.a;
    DoubleDouble pow_b = iv.b;
    for (std::size_t k = 0; k < c.size(); ++k) {
        sum += c[k] * (pow_b - pow_a) / static_cast<double>(k + 1);
        pow_a *= iv.a;
        pow_b *= iv.b;
    }
    return sum;
}

double integrate(const Polynomial& p, const Interval& iv) { return integrate_extended(p, iv).to_double(); }

}  // namespace quadlsq
