#include "quadlsq/system.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "quadlsq/errors.hpp"
#include "quadlsq/kernels.hpp"

namespace quadlsq {

double DegreeTolerance::threshold(double mu0) const {
    return absolute ? *absolute : relative * std::max(1.0, std::abs(mu0));
}

namespace {

struct MomentProfile {
    ExtVector canonical;  // mu_0 .. mu_{n-1}
    ExtVector extended;   // mu_n .. mu_{2n}
};

MomentProfile compute_moments(const NodeSet& ns, const CanonicalBasis& cb) {
    MomentProfile m;
    m.canonical.reserve(cb.phis.size());
    for (const auto& phi : cb.phis) m.canonical.push_back(integrate_extended(phi, ns.interval()));
    m.extended.reserve(cb.qs.size());
    for (const auto& q : cb.qs) m.extended.push_back(integrate_extended(q, ns.interval()));
    return m;
}

struct Principal {
    int degree;
    DoubleDouble mu_Q;
};

Principal find_principal(const MomentProfile& m, std::size_t n, const DegreeTolerance& tol) {
    const double eps = tol.threshold(m.canonical.front().to_double());
    for (std::size_t k = 0; k < m.extended.size(); ++k) {
        if (std::abs(m.extended[k].to_double()) > eps) return {static_cast<int>(n + k) - 1, m.extended[k]};
    }
    throw NumericalError("degree overflow");
}

}  // namespace

DegreeInfo detect_degree(const NodeSet& ns, const CanonicalBasis& cb, const DegreeTolerance& tol) {
    const Principal p = find_principal(compute_moments(ns, cb), ns.size(), tol);
    return {p.degree, p.mu_Q.to_double()};
}

FundamentalSystem build_system(const NodeSet& ns, const CanonicalBasis& cb, const DegreeTolerance& tol) {
    const std::size_t n = ns.size();
    assert(cb.n() == n);
    const MomentProfile moments = compute_moments(ns, cb);
    const Principal principal = find_principal(moments, n, tol);

    FundamentalSystem fs;
    fs.n = n;
    fs.interval = ns.interval();
    fs.A_ext = Matrix<DoubleDouble>(n, n);
    ExtVector row_values(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto tail = ns.nodes().subspan(i);
        eval_many(cb.phis[i], tail, std::span<DoubleDouble>(row_values).first(tail.size()));
        for (std::size_t j = i; j < n; ++j) fs.A_ext(i, j) = row_values[j - i];
    }
    fs.c_ext = moments.canonical;
    fs.mu_Q_ext = principal.mu_Q;
    fs.degree = principal.degree;
    fs.mu_Q = principal.mu_Q.to_double();

    fs.moments_ext = moments.canonical;
    fs.moments_ext.insert(fs.moments_ext.end(), moments.extended.begin(), moments.extended.end());
    fs.moments = to_doubles(fs.moments_ext);

    fs.A = to_doubles(fs.A_ext);
    fs.c = to_doubles(fs.c_ext);
    fs.F = Matrix<double>(n + 1, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fs.F(i, j) = fs.A(i, j);
    fs.c_tilde = fs.c;
    fs.c_tilde.push_back(fs.mu_Q);
    return fs;
}

ExtVector solve_weights_extended(const FundamentalSystem& fs) { return solve_upper(fs.A_ext, fs.c_ext); }

Vector solve_weights(const FundamentalSystem& fs) { return to_doubles(solve_weights_extended(fs)); }

Vector residual(const FundamentalSystem& fs, std::span<const DoubleDouble> x) {
    assert(x.size() == fs.n);
    Vector r(fs.n + 1);
    for (std::size_t i = 0; i < fs.n; ++i) {
        DoubleDouble acc = -fs.c_ext[i];
        for (std::size_t j = i; j < fs.n; ++j) acc += fs.A_ext(i, j) * x[j];
        r[i] = acc.to_double();
    }
    r[fs.n] = (-fs.mu_Q_ext).to_double();
    return r;
}

Vector residual(const FundamentalSystem& fs, std::span<const double> x) { return residual(fs, to_extended(x)); }

double pnorm(std::span<const double> r, double p) {
    const double scale = kernels::max_abs(r);
    if (p == kInfNorm || scale == 0.0) return scale;
    double sum = 0.0;
    for (double v : r) {
        const double u = std::abs(v) / scale;
        sum += p == 1.0 ? u : p == 2.0 ? u * u : std::pow(u, p);
    }
    return scale * (p == 1.0 ? sum : p == 2.0 ? std::sqrt(sum) : std::pow(sum, 1.0 / p));
}

std::map<double, double> residual_norms(std::span<const double> r, std::span<const double> orders) {
    std::map<double, double> out;
    for (double p : orders) {
        if (!(p >= 1.0)) throw InputError("norm order must be >= 1");
        out[p] = pnorm(r, p);
    }
    return out;
}

}  // namespace quadlsq
