#include "quadlsq/nodes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "quadlsq/errors.hpp"

namespace quadlsq {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::newton_cotes: return "nc";
        case Family::fejer1: return "fejer1";
        case Family::clenshaw_curtis: return "cc";
        case Family::gauss_legendre: return "gl";
        case Family::custom: return "custom";
    }
    return "custom";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "nc" || name == "newton_cotes" || name == "newton-cotes") return Family::newton_cotes;
    if (name == "fejer1" || name == "fejer" || name == "f") return Family::fejer1;
    if (name == "cc" || name == "clenshaw_curtis" || name == "clenshaw-curtis") return Family::clenshaw_curtis;
    if (name == "gl" || name == "gauss_legendre" || name == "gauss-legendre") return Family::gauss_legendre;
    if (name == "custom") return Family::custom;
    return std::nullopt;
}

namespace {

// Overwrites the lower half with the negated upper half of an ascending set.
void mirror(std::vector<double>& t) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n / 2; ++i) t[i] = -t[n - 1 - i];
    if (n % 2 == 1) t[n / 2] = 0.0;
}

// sin(pi * m / d) for the symmetric integer grids below; sin is odd in
// every libm, so +-m give exactly negated values.
double sin_pi_ratio(int m, int d) { return std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(d)); }

void require_count(int n, int minimum) {
    if (n < minimum) throw InputError("unsupported count");
}

}  // namespace

std::vector<double> newton_cotes_nodes(int n) {
    require_count(n, 2);
    const int m = n - 1;
    std::vector<double> t(n);
    for (int k = 0; k < n; ++k) t[k] = static_cast<double>(2 * k - m) / static_cast<double>(m);
    mirror(t);
    return t;
}

std::vector<double> fejer1_nodes(int n) {
    require_count(n, 1);
    // cos((2k-1) pi / (2n)) = sin((n - 2k + 1) pi / (2n)), listed ascending.
    std::vector<double> t(n);
    for (int k = 1; k <= n; ++k) t[n - k] = sin_pi_ratio(n - 2 * k + 1, 2 * n);
    mirror(t);
    return t;
}

std::vector<double> clenshaw_curtis_nodes(int n) {
    require_count(n, 2);
    const int m = n - 1;
    // cos(k pi / m) = sin((m - 2k) pi / (2m)).
    std::vector<double> t(n);
    for (int k = 0; k <= m; ++k) t[m - k] = sin_pi_ratio(m - 2 * k, 2 * m);
    mirror(t);
    return t;
}

std::vector<double> legendre_nodes(int n) {
    require_count(n, 1);
    std::vector<double> t(n);
    const int half = n / 2;
    for (int k = 1; k <= half; ++k) {
        double x = std::cos(std::numbers::pi * (4.0 * k - 1.0) / (4.0 * n + 2.0));
        bool converged = false;
        for (int iter = 0; iter < 100 && !converged; ++iter) {
            double p_prev = 1.0;
            double p = x;
            for (int j = 1; j < n; ++j) {
                const double p_next = ((2.0 * j + 1.0) * x * p - j * p_prev) / (j + 1.0);
                p_prev = p;
                p = p_next;
            }
            const double dp = n * (x * p - p_prev) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            converged = std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(x), 1e-3);
        }
        if (!converged) throw NumericalError("no convergence");
        t[n - k] = x;
    }
    mirror(t);
    return t;
}

NodeSet generate(const FamilySpec& spec) {
    std::vector<double> t;
    switch (spec.family) {
        case Family::newton_cotes: t = newton_cotes_nodes(spec.n); break;
        case Family::fejer1: t = fejer1_nodes(spec.n); break;
        case Family::clenshaw_curtis: t = clenshaw_curtis_nodes(spec.n); break;
        case Family::gauss_legendre: t = legendre_nodes(spec.n); break;
        case Family::custom: return NodeSet::create(spec.custom_nodes, spec.interval);
    }
    const Interval& iv = spec.interval;
    if (!iv.is_reference()) {
        const double mid = 0.5 * (iv.a + iv.b);
        const double half = 0.5 * (iv.b - iv.a);
        for (double& x : t) x = mid + half * x;
    }
    return NodeSet::create(std::move(t), iv);
}

double parse_node_literal(std::string_view text) {
    auto parse_one = [&](std::string_view s) {
        double v = 0.0;
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
            throw InputError("invalid node literal '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_one(text);
    const double num = parse_one(text.substr(0, slash));
    const double den = parse_one(text.substr(slash + 1));
    if (den == 0.0) throw InputError("invalid node literal '" + std::string(text) + "': zero denominator");
    return num / den;
}

std::vector<std::string> read_node_literals(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open node file '" + path.string() + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r\n");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

NodeSet load_node_file(const std::filesystem::path& path, Interval iv) {
    std::vector<double> t;
    for (const auto& lit : read_node_literals(path)) t.push_back(parse_node_literal(lit));
    return NodeSet::create(std::move(t), iv);
}

}  // namespace quadlsq
