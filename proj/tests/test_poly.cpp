#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "quadlsq/errors.hpp"
#include "quadlsq/poly.hpp"

using quadlsq::Interval;
using quadlsq::Polynomial;

TEST(Polynomial, TrimsTrailingZeros) {
    const Polynomial p{1.0, 2.0, 0.0, 0.0};
    EXPECT_EQ(p.degree(), 1u);
    EXPECT_EQ(p.coefficient(1), 2.0);
    EXPECT_EQ(p.coefficient(5), 0.0);

    const Polynomial z{0.0, 0.0};
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), 0u);
    EXPECT_TRUE(Polynomial().is_zero());
}

TEST(Polynomial, MulLinear) {
    const Polynomial p = quadlsq::mul_linear(quadlsq::mul_linear(Polynomial{1.0}, -1.0), 1.0);  // x^2 - 1
    ASSERT_EQ(p.degree(), 2u);
    EXPECT_EQ(p.coefficient(0), -1.0);
    EXPECT_EQ(p.coefficient(1), 0.0);
    EXPECT_EQ(p.coefficient(2), 1.0);
}

TEST(Polynomial, SumAndScale) {
    const Polynomial p{1.0, 1.0};
    const Polynomial q{-1.0, 1.0, 3.0};
    const Polynomial s = p + q;
    EXPECT_EQ(s.coefficient(0), 0.0);
    EXPECT_EQ(s.coefficient(1), 2.0);
    EXPECT_EQ(s.coefficient(2), 3.0);
    EXPECT_TRUE((0.0 * q).is_zero());
    EXPECT_EQ((2.0 * q).coefficient(2), 6.0);
}

TEST(Polynomial, Eval) {
    const Polynomial p{1.0, -3.0, 0.0, 2.0};
    EXPECT_EQ(quadlsq::eval(p, 2.0), 11.0);
    EXPECT_EQ(quadlsq::eval(p, -1.0), 2.0);

    const std::vector<double> xs = {-0.7, -0.1, 0.0, 0.3, 0.9, 1.5};
    std::vector<quadlsq::DoubleDouble> out(xs.size());
    quadlsq::eval_many(p, xs, out);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        EXPECT_EQ(out[i].hi, quadlsq::eval_extended(p, xs[i]).hi);
        EXPECT_EQ(out[i].lo, quadlsq::eval_extended(p, xs[i]).lo);
    }
}

TEST(Polynomial, IntegrateReferenceInterval) {
    EXPECT_EQ(quadlsq::integrate(Polynomial{1.0}), 2.0);
    EXPECT_EQ(quadlsq::integrate(Polynomial{0.0, 5.0}), 0.0);
    EXPECT_DOUBLE_EQ(quadlsq::integrate(Polynomial{0.0, 0.0, 1.0}), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(quadlsq::integrate(Polynomial{0.0, 0.0, 0.0, 0.0, 1.0}), 0.4);
    // x^3 - x has zero integral on (-1, 1)
    EXPECT_EQ(quadlsq::integrate(Polynomial{0.0, -1.0, 0.0, 1.0}), 0.0);
}

TEST(Polynomial, IntegrateGeneralInterval) {
    const auto iv = Interval::make(0.0, 2.0);
    EXPECT_DOUBLE_EQ(quadlsq::integrate(Polynomial{0.0, 0.0, 0.0, 1.0}, iv), 4.0);
    EXPECT_DOUBLE_EQ(quadlsq::integrate(Polynomial{1.0, 1.0}, iv), 4.0);
}

TEST(Interval, Validation) {
    EXPECT_THROW((void)Interval::make(1.0, 1.0), quadlsq::InputError);
    EXPECT_THROW((void)Interval::make(2.0, 1.0), quadlsq::InputError);
    EXPECT_THROW((void)Interval::make(0.0, INFINITY), quadlsq::InputError);
    EXPECT_TRUE(Interval{}.is_reference());
    EXPECT_FALSE(Interval::make(0.0, 1.0).is_reference());
}
