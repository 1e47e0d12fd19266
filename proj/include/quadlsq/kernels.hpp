#pragma once

// Data-parallel inner loops. Each kernel has a portable scalar reference
// and, on x86-64, an AVX2+FMA variant; the variant is picked once at runtime
// from CPUID. Setting QUADLSQ_ISA=scalar in the environment forces the
// reference path.
//
// horner_batch is lane-independent and the AVX2 variant performs the same
// IEEE operation sequence per lane as the scalar one, so results are
// bitwise identical. dot2 reassociates across lanes; both variants are
// compensated and agree to within the dot2 error bound.

#include <span>
#include <string_view>

#include "quadlsq/dd.hpp"

namespace quadlsq::kernels {

enum class Isa { scalar, avx2 };

[[nodiscard]] Isa active_isa() noexcept;
[[nodiscard]] bool isa_available(Isa isa) noexcept;
[[nodiscard]] std::string_view isa_name(Isa isa) noexcept;

/// out[i] = p(xs[i]) for p with extended coefficients (lowest degree first).
void horner_batch(std::span<const DoubleDouble> coeffs, std::span<const double> xs, std::span<DoubleDouble> out);

/// Compensated dot product (Ogita-Rump-Oishi Dot2): as accurate as if
/// computed in twice the working precision, then returned unrounded.
[[nodiscard]] DoubleDouble dot2(std::span<const double> x, std::span<const double> y);

[[nodiscard]] double max_abs(std::span<const double> x);

namespace scalar {
void horner_batch(std::span<const DoubleDouble> coeffs, std::span<const double> xs, std::span<DoubleDouble> out);
DoubleDouble dot2(std::span<const double> x, std::span<const double> y);
double max_abs(std::span<const double> x);
}  // namespace scalar

#if defined(QUADLSQ_HAVE_AVX2)
namespace avx2 {
void horner_batch(std::span<const DoubleDouble> coeffs, std::span<const double> xs, std::span<DoubleDouble> out);
DoubleDouble dot2(std::span<const double> x, std::span<const double> y);
double max_abs(std::span<const double> x);
}  // namespace avx2
#endif

}  // namespace quadlsq::kernels
