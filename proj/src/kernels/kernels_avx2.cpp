// Compiled with -mavx2 -mfma; only reached through the runtime dispatcher
// after CPUID confirms support.

#include <immintrin.h>

#include <algorithm>
#include <cassert>
#include <cmath>

#include "quadlsq/kernels.hpp"

namespace quadlsq::kernels::avx2 {

namespace {

struct Pair {
    __m256d hi;
    __m256d lo;
};

inline Pair two_sum(__m256d a, __m256d b) {
    const __m256d s = _mm256_add_pd(a, b);
    const __m256d bb = _mm256_sub_pd(s, a);
    const __m256d e = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, bb)), _mm256_sub_pd(b, bb));
    return {s, e};
}

inline Pair quick_two_sum(__m256d a, __m256d b) {
    const __m256d s = _mm256_add_pd(a, b);
    const __m256d e = _mm256_sub_pd(b, _mm256_sub_pd(s, a));
    return {s, e};
}

inline Pair two_prod(__m256d a, __m256d b) {
    const __m256d p = _mm256_mul_pd(a, b);
    const __m256d e = _mm256_fmsub_pd(a, b, p);
    return {p, e};
}

// Same operation order as scalar::horner_step.
inline Pair horner_step(Pair acc, __m256d x, __m256d c_hi, __m256d c_lo) {
    Pair p = two_prod(acc.hi, x);
    p.lo = _mm256_add_pd(p.lo, _mm256_mul_pd(acc.lo, x));
    p = quick_two_sum(p.hi, p.lo);
    Pair s = two_sum(p.hi, c_hi);
    const Pair t = two_sum(p.lo, c_lo);
    s.lo = _mm256_add_pd(s.lo, t.hi);
    s = quick_two_sum(s.hi, s.lo);
    s.lo = _mm256_add_pd(s.lo, t.lo);
    return quick_two_sum(s.hi, s.lo);
}

}  // namespace

void horner_batch(std::span<const DoubleDouble> coeffs, std::span<const double> xs, std::span<DoubleDouble> out) {
    assert(out.size() == xs.size());
    if (coeffs.empty()) {
        std::fill(out.begin(), out.end(), DoubleDouble{});
        return;
    }
    const std::size_t m = coeffs.size();
    std::size_t i = 0;
    for (; i + 4 <= xs.size(); i += 4) {
        const __m256d x = _mm256_loadu_pd(xs.data() + i);
        Pair acc{_mm256_set1_pd(coeffs[m - 1].hi), _mm256_set1_pd(coeffs[m - 1].lo)};
        for (std::size_t k = m - 1; k-- > 0;)
            acc = horner_step(acc, x, _mm256_set1_pd(coeffs[k].hi), _mm256_set1_pd(coeffs[k].lo));
        alignas(32) double hi[4];
        alignas(32) double lo[4];
        _mm256_store_pd(hi, acc.hi);
        _mm256_store_pd(lo, acc.lo);
        for (std::size_t l = 0; l < 4; ++l) out[i + l] = {hi[l], lo[l]};
    }
    if (i < xs.size()) scalar::horner_batch(coeffs, xs.subspan(i), out.subspan(i));
}

DoubleDouble dot2(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    __m256d p = _mm256_setzero_pd();
    __m256d s = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const Pair prod = two_prod(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i));
        const Pair sum = two_sum(p, prod.hi);
        p = sum.hi;
        s = _mm256_add_pd(s, _mm256_add_pd(sum.lo, prod.lo));
    }
    alignas(32) double lane_p[4];
    alignas(32) double lane_s[4];
    _mm256_store_pd(lane_p, p);
    _mm256_store_pd(lane_s, s);

    double total = lane_p[0];
    double err = lane_s[0] + lane_s[1] + lane_s[2] + lane_s[3];
    for (std::size_t l = 1; l < 4; ++l) {
        const DoubleDouble sum = eft::two_sum(total, lane_p[l]);
        total = sum.hi;
        err += sum.lo;
    }
    for (; i < n; ++i) {
        const DoubleDouble prod = eft::two_prod(x[i], y[i]);
        const DoubleDouble sum = eft::two_sum(total, prod.hi);
        total = sum.hi;
        err += sum.lo + prod.lo;
    }
    return eft::two_sum(total, err);
}

double max_abs(std::span<const double> x) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= x.size(); i += 4)
        best = _mm256_max_pd(best, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x.data() + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < x.size(); ++i) out = std::max(out, std::abs(x[i]));
    return out;
}

}  // namespace quadlsq::kernels::avx2
