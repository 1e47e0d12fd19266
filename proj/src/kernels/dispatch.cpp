#include <cstdlib>
#include <string_view>

#include "quadlsq/kernels.hpp"

namespace quadlsq::kernels {

namespace {

struct Table {
    Isa isa;
    void (*horner_batch)(std::span<const DoubleDouble>, std::span<const double>, std::span<DoubleDouble>);
    DoubleDouble (*dot2)(std::span<const double>, std::span<const double>);
    double (*max_abs)(std::span<const double>);
};

bool cpu_has_avx2() noexcept {
#if defined(QUADLSQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Table select() noexcept {
    const char* forced = std::getenv("QUADLSQ_ISA");
    const bool want_scalar = forced != nullptr && std::string_view(forced) == "scalar";
#if defined(QUADLSQ_HAVE_AVX2)
    if (!want_scalar && cpu_has_avx2()) return {Isa::avx2, &avx2::horner_batch, &avx2::dot2, &avx2::max_abs};
#endif
    (void)want_scalar;
    return {Isa::scalar, &scalar::horner_batch, &scalar::dot2, &scalar::max_abs};
}

const Table& table() noexcept {
    static const Table t = select();
    return t;
}

}  // namespace

Isa active_isa() noexcept { return table().isa; }

bool isa_available(Isa isa) noexcept { return isa == Isa::scalar || cpu_has_avx2(); }

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void horner_batch(std::span<const DoubleDouble> coeffs, std::span<const double> xs, std::span<DoubleDouble> out) {
    table().horner_batch(coeffs, xs, out);
}

DoubleDouble dot2(std::span<const double> x, std::span<const double> y) { return table().dot2(x, y); }

double max_abs(std::span<const double> x) { return table().max_abs(x); }

}  // namespace quadlsq::kernels
