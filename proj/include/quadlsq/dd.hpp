#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two doubles with
// |lo| <= ulp(hi)/2, giving roughly 106 bits of significand. Used for
// polynomial coefficients, moments and the triangular solves, where plain
// doubles lose the small principal moments to cancellation.

#include <cmath>
#include <span>
#include <vector>

namespace quadlsq {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}  // NOLINT: implicit widening is intended
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    [[nodiscard]] constexpr double to_double() const { return hi + lo; }
};

using ExtVector = std::vector<DoubleDouble>;

namespace eft {

/// s + e == a + b exactly (Knuth).
inline DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

/// Requires |a| >= |b| or a == 0 (Dekker).
inline DoubleDouble quick_two_sum(double a, double b) {
    const double s = a + b;
    const double e = b - (s - a);
    return {s, e};
}

/// p + e == a * b exactly, barring underflow.
inline DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    const double e = std::fma(a, b, -p);
    return {p, e};
}

}  // namespace eft

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble s = eft::two_sum(a.hi, b.hi);
    const DoubleDouble t = eft::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = eft::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return eft::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator+(const DoubleDouble& a, double b) {
    DoubleDouble s = eft::two_sum(a.hi, b);
    s.lo += a.lo;
    return eft::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }
inline DoubleDouble operator-(const DoubleDouble& a, double b) { return a + (-b); }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble p = eft::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return eft::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
    DoubleDouble p = eft::two_prod(a.hi, b);
    p.lo += a.lo * b;
    return eft::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
    // Three-step long division; each quotient digit removes ~53 bits.
    const double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    const DoubleDouble q = eft::quick_two_sum(q1, q2);
    return q + q3;
}

inline DoubleDouble operator/(const DoubleDouble& a, double b) { return a / DoubleDouble(b); }

inline DoubleDouble& operator+=(DoubleDouble& a, const DoubleDouble& b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, const DoubleDouble& b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, const DoubleDouble& b) { return a = a * b; }

inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

inline DoubleDouble abs(const DoubleDouble& a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline DoubleDouble sqrt(const DoubleDouble& a) {
    if (a.hi <= 0.0) return {std::sqrt(a.hi), 0.0};
    const double x = std::sqrt(a.hi);
    // One Newton step on x^2 = a, carried in extended precision.
    const DoubleDouble residual = a - eft::two_prod(x, x);
    return eft::quick_two_sum(x, residual.hi / (2.0 * x));
}

[[nodiscard]] inline std::vector<double> to_doubles(std::span<const DoubleDouble> v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
    return out;
}

[[nodiscard]] inline ExtVector to_extended(std::span<const double> v) {
    return ExtVector(v.begin(), v.end());
}

}  // namespace quadlsq
