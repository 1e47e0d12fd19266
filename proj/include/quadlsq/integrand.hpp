#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "quadlsq/poly.hpp"

namespace quadlsq {

/// A test function plus, when known in closed form, its integral.
struct Integrand {
    std::string name;
    std::function<double(double)> f;
    std::function<double(const Interval&)> exact;  ///< empty when unknown
};

/// `poly:c0,c1,...` (lowest degree first), `runge` = 1/(1+25x^2) or
/// `expx` = e^x. Throws InputError("unknown integrand ...") otherwise.
[[nodiscard]] Integrand parse_integrand(std::string_view spec);

/// Q(f) = sum_i w_i f(t_i), accumulated with a compensated dot product.
[[nodiscard]] double apply_rule(std::span<const double> nodes, std::span<const double> weights, const Integrand& g);

}  // namespace quadlsq
