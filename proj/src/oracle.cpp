#include "quadlsq/oracle.hpp"

#include <cassert>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "quadlsq/errors.hpp"

namespace quadlsq::oracle {

using boost::multiprecision::cpp_int;

namespace {

using LMatrix = std::vector<std::vector<long double>>;

// Gaussian elimination with partial pivoting on an augmented n x (n+1) matrix.
std::vector<long double> eliminate(LMatrix m) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        if (std::fabs(m[piv][col]) < 1e-30L) throw NumericalError("numerically singular");
        std::swap(m[piv], m[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const long double f = m[r][col] / m[col][col];
            if (f == 0.0L) continue;
            for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<long double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        long double acc = m[i][n];
        for (std::size_t k = i + 1; k < n; ++k) acc -= m[i][k] * x[k];
        x[i] = acc / m[i][i];
    }
    return x;
}

long double widen(const DoubleDouble& v) { return static_cast<long double>(v.hi) + static_cast<long double>(v.lo); }

}  // namespace

Vector lsq_normal_equations(const FundamentalSystem& fs) {
    const std::size_t n = fs.n;
    // F in long double: the top n rows are A, the last row is zero.
    LMatrix f(n + 1, std::vector<long double>(n, 0.0L));
    std::vector<long double> rhs(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) f[i][j] = widen(fs.A_ext(i, j));
        rhs[i] = widen(fs.c_ext[i]);
    }
    rhs[n] = widen(fs.mu_Q_ext);

    LMatrix normal(n, std::vector<long double>(n + 1, 0.0L));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long double s = 0.0L;
            for (std::size_t k = 0; k <= n; ++k) s += f[k][i] * f[k][j];
            normal[i][j] = s;
        }
        long double s = 0.0L;
        for (std::size_t k = 0; k <= n; ++k) s += f[k][i] * rhs[k];
        normal[i][n] = s;
    }
    const auto y = eliminate(std::move(normal));
    return Vector(y.begin(), y.end());
}

int degree_by_monomials(const NodeSet& ns, std::span<const double> weights, const DegreeTolerance& tol) {
    assert(weights.size() == ns.size());
    const std::size_t n = ns.size();
    const long double a = ns.interval().a;
    const long double b = ns.interval().b;
    const double eps = tol.threshold(static_cast<double>(b - a));
    std::vector<long double> powers(n, 1.0L);
    long double pa = a;
    long double pb = b;
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        long double q = 0.0L;
        for (std::size_t i = 0; i < n; ++i) q += static_cast<long double>(weights[i]) * powers[i];
        const long double exact = (pb - pa) / static_cast<long double>(k + 1);
        if (std::fabs(q - exact) > eps) return static_cast<int>(k) - 1;
        for (std::size_t i = 0; i < n; ++i) powers[i] *= ns[i];
        pa *= a;
        pb *= b;
    }
    return static_cast<int>(2 * n);
}

DirectMinimax direct_minimax(const FundamentalSystem& fs) {
    const std::size_t n = fs.n;
    const long double sign_mu = fs.mu_Q_ext.hi < 0.0 ? -1.0L : 1.0L;
    LMatrix m(n + 1, std::vector<long double>(n + 2, 0.0L));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = widen(fs.A_ext(i, j));
        m[i][n] = -1.0L;  // r_i = (A z - c)_i = +eps for i <= n
        m[i][n + 1] = widen(fs.c_ext[i]);
    }
    // Last row: r_{n+1}(z) = -mu_Q = -sign(mu_Q) eps.
    m[n][n] = sign_mu;
    m[n][n + 1] = widen(fs.mu_Q_ext);
    const auto x = eliminate(std::move(m));
    DirectMinimax out;
    out.z.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    out.eps = static_cast<double>(x[n]);
    return out;
}

namespace {

const cpp_int& limit_2_63() {
    static const cpp_int v = cpp_int(1) << 63;
    return v;
}

void check_magnitude(const Rational& r) {
    if (abs(numerator(r)) >= limit_2_63() || denominator(r) >= limit_2_63()) throw InputError("irrational nodes");
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw InputError("invalid rational literal '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    cpp_int digits = 0;
    long long scale = 0;  // value = digits * 10^scale
    bool any_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any_digit = true)
        digits = digits * 10 + (text[i] - '0');
    if (i < text.size() && text[i] == '.') {
        for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any_digit = true) {
            digits = digits * 10 + (text[i] - '0');
            --scale;
        }
    }
    if (!any_digit) bad_literal(text);
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
        long long e = 0;
        bool any_exp = false;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any_exp = true) {
            e = e * 10 + (text[i] - '0');
            if (e > 400) throw InputError("irrational nodes");
        }
        if (!any_exp) bad_literal(text);
        scale += exp_negative ? -e : e;
    }
    if (i != text.size()) bad_literal(text);
    if (scale < -400 || scale > 400) throw InputError("irrational nodes");
    const cpp_int power = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::llabs(scale)));
    Rational value = scale >= 0 ? Rational(digits * power) : Rational(digits, power);
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    Rational value;
    if (slash == std::string_view::npos) {
        value = parse_decimal(text);
    } else {
        const Rational num = parse_decimal(text.substr(0, slash));
        const Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0) bad_literal(text);
        value = num / den;
    }
    check_magnitude(value);
    return value;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("zero denominator");
    return Rational(cpp_int(num), cpp_int(den));
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw InputError("irrational nodes");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
    const auto m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    const cpp_int num(m);
    if (exp >= 0) return Rational(num << exp);
    return Rational(num, cpp_int(1) << -exp);
}

Rational recover_rational(double x, std::uint64_t max_den) {
    if (std::signbit(x)) return -recover_rational(-x, max_den);
    const Rational exact = rational_from_double(x);
    if (denominator(exact) == 1) return exact;
    // Half-ulp rounding interval around x.
    const Rational hi = (exact + rational_from_double(std::nextafter(x, std::numeric_limits<double>::infinity()))) / 2;
    const Rational lo = (exact + rational_from_double(std::nextafter(x, 0.0))) / 2;

    // Continued-fraction convergents of x, simplest first.
    cpp_int h_prev = 0, h = 1, k_prev = 1, k = 0;
    Rational rest = exact;
    for (int step = 0; step < 128; ++step) {
        const cpp_int a = numerator(rest) / denominator(rest);
        const cpp_int h_next = a * h + h_prev;
        const cpp_int k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        if (k > max_den) break;
        const Rational candidate(h, k);
        if (candidate > lo && candidate < hi) return candidate;
        const Rational frac = rest - Rational(a);
        if (frac == 0) break;
        rest = 1 / frac;
    }
    throw InputError("irrational nodes");
}

namespace {

using RPoly = std::vector<Rational>;

RPoly mul_linear(const RPoly& p, const Rational& root) {
    RPoly out(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k + 1] += p[k];
        out[k] -= p[k] * root;
    }
    return out;
}

Rational eval(const RPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

Rational integrate(const RPoly& p, const Rational& a, const Rational& b) {
    Rational sum = 0;
    Rational pa = a;
    Rational pb = b;
    for (std::size_t k = 0; k < p.size(); ++k) {
        sum += p[k] * (pb - pa) / static_cast<long long>(k + 1);
        pa *= a;
        pb *= b;
    }
    return sum;
}

std::vector<Rational> solve_upper(const std::vector<std::vector<Rational>>& upper, const std::vector<Rational>& rhs) {
    const std::size_t n = rhs.size();
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= upper[i][j] * x[j];
        x[i] = acc / upper[i][i];
    }
    return x;
}

}  // namespace

RationalRule rational_pipeline(std::span<const Rational> nodes, const Rational& a, const Rational& b) {
    const std::size_t n = nodes.size();
    if (n == 0) throw InputError("empty node set");
    for (std::size_t i = 1; i < n; ++i)
        if (!(nodes[i - 1] < nodes[i])) throw InputError("unordered nodes");
    if (!(a < b)) throw InputError("invalid interval: require a < b");

    RationalRule rule;
    rule.nodes.assign(nodes.begin(), nodes.end());
    rule.a = a;
    rule.b = b;

    std::vector<RPoly> phis{RPoly{Rational(1)}};
    for (std::size_t j = 1; j < n; ++j) phis.push_back(mul_linear(phis.back(), nodes[j - 1]));
    std::vector<RPoly> qs{mul_linear(phis.back(), nodes[n - 1])};
    for (std::size_t j = n + 1; j <= 2 * n; ++j) qs.push_back(mul_linear(qs.back(), nodes[cyclic_node_index(j, n) - 1]));

    for (const auto& p : phis) rule.moments.push_back(integrate(p, a, b));
    rule.c = rule.moments;
    for (const auto& q : qs) rule.moments.push_back(integrate(q, a, b));

    rule.A.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) rule.A[i][j] = eval(phis[i], nodes[j]);

    bool found = false;
    for (std::size_t j = n; j <= 2 * n && !found; ++j) {
        if (rule.moments[j] != 0) {
            rule.degree = static_cast<int>(j) - 1;
            rule.mu_Q = rule.moments[j];
            found = true;
        }
    }
    if (!found) throw NumericalError("degree overflow");

    rule.weights = solve_upper(rule.A, rule.c);
    rule.tau = solve_upper(rule.A, std::vector<Rational>(n, abs(rule.mu_Q)));
    rule.z_star.resize(n);
    for (std::size_t i = 0; i < n; ++i) rule.z_star[i] = rule.weights[i] + rule.tau[i];
    return rule;
}

RationalRule rational_pipeline(const NodeSet& ns) {
    std::vector<Rational> nodes;
    nodes.reserve(ns.size());
    for (double t : ns.nodes()) nodes.push_back(recover_rational(t));
    return rational_pipeline(nodes, recover_rational(ns.interval().a), recover_rational(ns.interval().b));
}

}  // namespace quadlsq::oracle
