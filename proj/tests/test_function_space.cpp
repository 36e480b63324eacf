#include "morse/laurent_poly.hpp"
#include "morse/weighted_function.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace morse;

namespace {
LaurentPoly P(std::initializer_list<std::pair<int, Rational>> terms) {
    LaurentPoly p;
    for (const auto& [k, c] : terms) p.add_term(k, RadicalScalar(c));
    return p;
}
const Rational half = make_rational(1, 2);
}  // namespace

TEST(LaurentPoly, Arithmetic) {
    const LaurentPoly two_minus_y = P({{0, 2}, {1, -1}});
    EXPECT_EQ(two_minus_y * LaurentPoly::y(-1), P({{-1, 2}, {0, -1}}));
    EXPECT_EQ(two_minus_y + LaurentPoly{}, two_minus_y);
    EXPECT_EQ(P({{0, 1}, {1, 1}}) * P({{0, 1}, {1, -1}}), P({{0, 1}, {2, -1}}));
    EXPECT_TRUE((two_minus_y - two_minus_y).is_zero());
    EXPECT_EQ(two_minus_y.scaled(RadicalScalar(3)), P({{0, 6}, {1, -3}}));
    EXPECT_TRUE(two_minus_y.scaled(RadicalScalar{}).is_zero());
}

TEST(LaurentPoly, NoZeroCoefficientsStored) {
    LaurentPoly p = P({{2, 1}});
    p.add_term(2, RadicalScalar(-1));
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.size(), 0u);
}

TEST(LaurentPoly, Derivative) {
    EXPECT_EQ(derivative(LaurentPoly::y(2)), P({{1, 2}}));
    EXPECT_EQ(derivative(LaurentPoly::y(-1)), P({{-2, -1}}));
    EXPECT_TRUE(derivative(LaurentPoly(7)).is_zero());
}

TEST(LaurentPoly, Rendering) {
    EXPECT_EQ(P({{-1, 2}, {0, -1}}).str(), "2*y^-1 + -1");
    EXPECT_EQ(P({{1, 1}, {2, half}}).str(), "y + 1/2*y^2");
    EXPECT_EQ(LaurentPoly{}.str(), "0");
}

TEST(WeightedDerivative, Examples) {
    // d/dy e^(-y/2) y^(1/2) = e^(-y/2) y^(1/2) ((1/2) y^-1 - 1/2)
    WeightedFunction f{half, LaurentPoly(1)};
    WeightedFunction df = weighted_derivative(f);
    EXPECT_EQ(df.s, half);
    EXPECT_EQ(df.poly, P({{-1, half}, {0, -half}}));

    WeightedFunction g{0, LaurentPoly(1)};
    EXPECT_EQ(weighted_derivative(g).poly, LaurentPoly(-half));

    WeightedFunction z{make_rational(3, 2), {}};
    EXPECT_TRUE(weighted_derivative(z).is_zero());
    EXPECT_EQ(weighted_derivative(z).s, make_rational(3, 2));
}

TEST(WeightedDerivative, MatchesPolynomialRuleAtZeroWeight) {
    // s = 0 and P polynomial: d/dy[e^(-y/2) P] = e^(-y/2)(P' - P/2)
    testgen::Gen g(3);
    for (int k = 0; k < 50; ++k) {
        LaurentPoly p = g.poly(0, 4);
        WeightedFunction f{0, p};
        EXPECT_EQ(weighted_derivative(f).poly, derivative(p) - p.scaled(RadicalScalar(half)));
    }
}

TEST(WeightedDerivative, AgreesWithCentralDifference) {
    testgen::Gen g(5);
    const double h = 1e-5;
    for (int k = 0; k < 100; ++k) {
        WeightedFunction f = g.function(k % 2 == 1);
        if (f.is_zero()) continue;
        WeightedFunction df = weighted_derivative(f);
        for (double y : {0.5, 1.0, 2.0}) {
            const auto fd = (f.evaluate(y + h) - f.evaluate(y - h)) / (2 * h);
            const auto exact = df.evaluate(y);
            const double scale = std::max(std::abs(exact), std::abs(f.evaluate(y)));
            EXPECT_LE(std::abs(fd - exact), 1e-6 * scale) << f.str() << " at y=" << y;
        }
    }
}

TEST(AlignAndCompare, Examples) {
    EXPECT_EQ(align_and_compare({half, LaurentPoly::y(1)}, {make_rational(3, 2), LaurentPoly(1)}), Comparison::Equal);
    EXPECT_EQ(align_and_compare({0, LaurentPoly(1)}, {half, LaurentPoly(1)}), Comparison::Incomparable);
    EXPECT_EQ(align_and_compare({1, LaurentPoly(1)}, {1, LaurentPoly(2)}), Comparison::Unequal);
    // zero functions compare regardless of weight
    EXPECT_EQ(align_and_compare({0, {}}, {half, {}}), Comparison::Equal);
    EXPECT_EQ(align_and_compare({0, {}}, {half, LaurentPoly(1)}), Comparison::Unequal);
}

TEST(AlignAndCompare, SymmetricAndTransitive) {
    testgen::Gen g(9);
    for (int k = 0; k < 100; ++k) {
        WeightedFunction f = g.function();
        const int d1 = static_cast<int>(g.integer(-3, 3));
        const int d2 = static_cast<int>(g.integer(-3, 3));
        // same function, three different weight bookkeepings
        WeightedFunction a = f;
        WeightedFunction b{f.s + d1, f.poly.shifted(-d1)};
        WeightedFunction c{f.s + d2, f.poly.shifted(-d2)};
        EXPECT_EQ(align_and_compare(a, b), Comparison::Equal);
        EXPECT_EQ(align_and_compare(b, a), Comparison::Equal);
        EXPECT_EQ(align_and_compare(b, c), Comparison::Equal);
        EXPECT_EQ(align_and_compare(a, c), Comparison::Equal);

        WeightedFunction other = g.function();
        EXPECT_EQ(align_and_compare(a, other), align_and_compare(other, a));
    }
}

TEST(WeightedFunction, SumAlignsToLowerWeight) {
    WeightedFunction a{half, LaurentPoly(1)};
    WeightedFunction b{make_rational(3, 2), LaurentPoly(1)};
    WeightedFunction sum = a + b;
    EXPECT_EQ(sum.s, half);
    EXPECT_EQ(sum.poly, P({{0, 1}, {1, 1}}));
    EXPECT_THROW((a + WeightedFunction{0, LaurentPoly(1)}), std::invalid_argument);
    EXPECT_EQ(a.str(), "exp(-y/2) * y^(1/2) * (1)");
}
