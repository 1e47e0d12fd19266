#include <algorithm>
#include <cassert>
#include <cmath>

#include "quadlsq/kernels.hpp"

namespace quadlsq::kernels::scalar {

namespace {

// One Horner step acc <- acc * x + c. The AVX2 kernel mirrors this sequence
// operation for operation; keep the two in sync.
inline DoubleDouble horner_step(DoubleDouble acc, double x, DoubleDouble c) {
    // acc * x
    double p = acc.hi * x;
    double e = std::fma(acc.hi, x, -p);
    e += acc.lo * x;
    double s = p + e;
    e = e - (s - p);
    p = s;
    // + c (accurate double-double addition)
    double sh = p + c.hi;
    double bb = sh - p;
    double sl = (p - (sh - bb)) + (c.hi - bb);
    double th = e + c.lo;
    bb = th - e;
    double tl = (e - (th - bb)) + (c.lo - bb);
    sl += th;
    s = sh + sl;
    sl = sl - (s - sh);
    sh = s;
    sl += tl;
    s = sh + sl;
    sl = sl - (s - sh);
    return {s, sl};
}

}  // namespace

void horner_batch(std::span<const DoubleDouble> coeffs, std::span<const double> xs, std::span<DoubleDouble> out) {
    assert(out.size() == xs.size());
    if (coeffs.empty()) {
        std::fill(out.begin(), out.end(), DoubleDouble{});
        return;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        DoubleDouble acc = coeffs.back();
        for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = horner_step(acc, xs[i], coeffs[k]);
        out[i] = acc;
    }
}

DoubleDouble dot2(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    double p = 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const DoubleDouble prod = eft::two_prod(x[i], y[i]);
        const DoubleDouble sum = eft::two_sum(p, prod.hi);
        p = sum.hi;
        s += sum.lo + prod.lo;
    }
    return eft::two_sum(p, s);
}

double max_abs(std::span<const double> x) {
    double best = 0.0;
    for (double v : x) best = std::max(best, std::abs(v));
    return best;
}

}  // namespace quadlsq::kernels::scalar
