#include "quadlsq/integrand.hpp"

#include <cmath>
#include <vector>

#include "quadlsq/errors.hpp"
#include "quadlsq/kernels.hpp"
#include "quadlsq/nodes.hpp"

namespace quadlsq {

namespace {

Integrand polynomial_integrand(std::string_view list) {
    std::vector<double> coeffs;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto end = comma == std::string_view::npos ? list.size() : comma;
        auto tok = list.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) throw InputError("empty coefficient in integrand 'poly:" + std::string(list) + "'");
        coeffs.push_back(parse_node_literal(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    auto p = Polynomial::from_doubles(coeffs);
    return {"poly:" + std::string(list), [p](double x) { return eval(p, x); },
            [p](const Interval& iv) { return integrate(p, iv); }};
}

}  // namespace

Integrand parse_integrand(std::string_view spec) {
    if (spec.starts_with("poly:")) return polynomial_integrand(spec.substr(5));
    if (spec == "runge") {
        return {"runge", [](double x) { return 1.0 / (1.0 + 25.0 * x * x); },
                [](const Interval& iv) { return (std::atan(5.0 * iv.b) - std::atan(5.0 * iv.a)) / 5.0; }};
    }
    if (spec == "expx") {
        return {"expx", [](double x) { return std::exp(x); },
                [](const Interval& iv) { return std::exp(iv.b) - std::exp(iv.a); }};
    }
    throw InputError("unknown integrand '" + std::string(spec) + "'");
}

double apply_rule(std::span<const double> nodes, std::span<const double> weights, const Integrand& g) {
    if (nodes.size() != weights.size()) throw InputError("node and weight counts differ");
    std::vector<double> fx(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) fx[i] = g.f(nodes[i]);
    return kernels::dot2(weights, fx).to_double();
}

}  // namespace quadlsq
