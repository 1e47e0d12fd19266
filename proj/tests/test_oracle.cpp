#include <cmath>

#include <gtest/gtest.h>

#include "quadlsq/errors.hpp"
#include "quadlsq/minimax.hpp"
#include "quadlsq/nodes.hpp"
#include "quadlsq/oracle.hpp"

using namespace quadlsq;
using oracle::Rational;

namespace {

FundamentalSystem system_for(const NodeSet& ns) { return build_system(ns, build_basis(ns)); }

}  // namespace

TEST(Oracle, ParseRational) {
    EXPECT_EQ(oracle::parse_rational("3/8"), Rational(3, 8));
    EXPECT_EQ(oracle::parse_rational("-0.125"), Rational(-1, 8));
    EXPECT_EQ(oracle::parse_rational("1e-3"), Rational(1, 1000));
    EXPECT_EQ(oracle::parse_rational("2"), Rational(2));
    EXPECT_EQ(oracle::parse_rational("-2/4"), Rational(-1, 2));
    EXPECT_THROW((void)oracle::parse_rational("x"), InputError);
    EXPECT_THROW((void)oracle::parse_rational("1/0"), InputError);
}

TEST(Oracle, RecoverRational) {
    EXPECT_EQ(oracle::recover_rational(0.5), Rational(1, 2));
    EXPECT_EQ(oracle::recover_rational(-0.25), Rational(-1, 4));
    EXPECT_EQ(oracle::recover_rational(1.0 / 3.0), Rational(1, 3));
    EXPECT_EQ(oracle::recover_rational(-2.0 / 7.0), Rational(-2, 7));
    EXPECT_EQ(oracle::recover_rational(3.0), Rational(3));
    EXPECT_EQ(oracle::recover_rational(0.0), Rational(0));
    EXPECT_THROW((void)oracle::recover_rational(std::sqrt(3.0) / 2.0), InputError);
    EXPECT_THROW((void)oracle::recover_rational(std::nextafter(0.5, 0.0)), InputError);
}

TEST(Oracle, ExactFromDouble) {
    EXPECT_EQ(oracle::rational_from_double(0.1), Rational(3602879701896397, std::int64_t{1} << 55));
    EXPECT_EQ(oracle::rational_from_double(-1.5), Rational(-3, 2));
}

TEST(Oracle, RationalSimpson) {
    const std::vector<Rational> t = {-1, 0, 1};
    const auto rr = oracle::rational_pipeline(t);
    EXPECT_EQ(rr.degree, 3);
    EXPECT_EQ(rr.mu_Q, Rational(-4, 15));
    EXPECT_EQ(rr.weights, (std::vector<Rational>{Rational(1, 3), Rational(4, 3), Rational(1, 3)}));
    EXPECT_EQ(rr.tau, (std::vector<Rational>{Rational(2, 15), 0, Rational(2, 15)}));
    EXPECT_EQ(rr.z_star, (std::vector<Rational>{Rational(7, 15), Rational(4, 3), Rational(7, 15)}));
}

TEST(Oracle, RationalClenshawCurtisFour) {
    // sin(pi/6) rounds below 1/2, so the generated nodes are not rational;
    // the literal node file is.
    EXPECT_THROW((void)oracle::rational_pipeline(generate({Family::clenshaw_curtis, 4, {}, {}})), InputError);
    const auto rr = oracle::rational_pipeline(load_node_file(QUADLSQ_DATA_DIR "/nodes/cc4.txt"));
    const Rational A[4][4] = {{1, 1, 1, 1},
                              {0, Rational(1, 2), Rational(3, 2), 2},
                              {0, 0, Rational(3, 2), 3},
                              {0, 0, 0, Rational(3, 2)}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_EQ(rr.A[i][j], A[i][j]) << i << "," << j;
    EXPECT_EQ(rr.c, (std::vector<Rational>{2, 2, Rational(5, 3), Rational(1, 6)}));
    EXPECT_EQ(rr.weights, (std::vector<Rational>{Rational(1, 9), Rational(8, 9), Rational(8, 9), Rational(1, 9)}));
    EXPECT_EQ(rr.mu_Q, Rational(1, 15));
    EXPECT_EQ(rr.degree, 3);
}

TEST(Oracle, IrrationalNodesRejected) {
    EXPECT_THROW((void)oracle::rational_pipeline(generate({Family::gauss_legendre, 3, {}, {}})), InputError);
    EXPECT_THROW((void)oracle::rational_pipeline(generate({Family::fejer1, 3, {}, {}})), InputError);
}

TEST(Oracle, RationalMatchesFloatingNewtonCotes) {
    for (int n = 2; n <= 17; ++n) {
        const auto ns = generate({Family::newton_cotes, n, {}, {}});
        const auto rr = oracle::rational_pipeline(ns);
        const auto fs = system_for(ns);
        const auto sol = solve_rule(fs);
        EXPECT_EQ(rr.degree, fs.degree);
        EXPECT_NEAR(oracle::to_double(rr.mu_Q), fs.mu_Q, 1e-13 * std::abs(fs.mu_Q));
        for (int i = 0; i < n; ++i) {
            const double w = oracle::to_double(rr.weights[i]);
            EXPECT_NEAR(sol.omega[i], w, 1e-13 * std::abs(w)) << "n=" << n << " i=" << i;
        }
    }
}

TEST(Oracle, NormalEquationsAgreeWithBackSubstitution) {
    for (Family f : {Family::newton_cotes, Family::clenshaw_curtis, Family::fejer1, Family::gauss_legendre}) {
        for (int n = 2; n <= 12; ++n) {
            const auto fs = system_for(generate({f, n, {}, {}}));
            const auto w = solve_weights(fs);
            const auto y = oracle::lsq_normal_equations(fs);
            for (int i = 0; i < n; ++i) EXPECT_NEAR(y[i], w[i], 1e-8 * std::abs(w[i])) << family_name(f) << n;
        }
    }
}

TEST(Oracle, DirectMinimaxAgrees) {
    for (Family f : {Family::newton_cotes, Family::clenshaw_curtis, Family::fejer1, Family::gauss_legendre}) {
        for (int n = 2; n <= 12; ++n) {
            const auto fs = system_for(generate({f, n, {}, {}}));
            const auto sol = solve_rule(fs);
            const auto dm = oracle::direct_minimax(fs);
            EXPECT_NEAR(dm.eps, std::abs(fs.mu_Q), 1e-10 * std::abs(fs.mu_Q));
            for (int i = 0; i < n; ++i)
                EXPECT_NEAR(dm.z[i], sol.z_star[i], 1e-10 * std::abs(sol.z_star[i])) << family_name(f) << n;
        }
    }
}

TEST(Oracle, MonomialDegreeAgrees) {
    for (Family f : {Family::newton_cotes, Family::clenshaw_curtis, Family::fejer1, Family::gauss_legendre}) {
        for (int n = 1; n <= 12; ++n) {
            if (n == 1 && (f == Family::newton_cotes || f == Family::clenshaw_curtis)) continue;
            const auto ns = generate({f, n, {}, {}});
            const auto fs = system_for(ns);
            EXPECT_EQ(oracle::degree_by_monomials(ns, solve_weights(fs)), fs.degree) << family_name(f) << n;
        }
    }
}
