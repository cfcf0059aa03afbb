#include <gtest/gtest.h>

#include <limits>

#include "heaps/polynomial.hpp"

using heaps::IntPolynomial;

TEST(IntPolynomial, TrimsTrailingZeros) {
    IntPolynomial p({1, 2, 0, 0});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p.coeffs(), (std::vector<std::int64_t>{1, 2}));
    EXPECT_TRUE(IntPolynomial({0, 0}).is_zero());
    EXPECT_EQ(IntPolynomial().degree(), -1);
}

TEST(IntPolynomial, FallingFactorial) {
    // lambda (lambda - 1) (lambda - 2) = lambda^3 - 3 lambda^2 + 2 lambda
    EXPECT_EQ(IntPolynomial::falling_factorial(3), IntPolynomial({0, 2, -3, 1}));
    EXPECT_EQ(IntPolynomial::falling_factorial(0), IntPolynomial::constant(1));
    for (std::int64_t x = -3; x <= 5; ++x) {
        std::int64_t expected = 1;
        for (std::int64_t i = 0; i < 4; ++i) {
            expected *= x - i;
        }
        EXPECT_EQ(IntPolynomial::falling_factorial(4).evaluate(x), expected);
    }
}

TEST(IntPolynomial, Arithmetic) {
    IntPolynomial a({1, 1});
    IntPolynomial b({-1, 1});
    EXPECT_EQ(a * b, IntPolynomial({-1, 0, 1}));
    EXPECT_EQ(a + b, IntPolynomial({0, 2}));
    EXPECT_EQ(a - a, IntPolynomial());
    EXPECT_EQ(IntPolynomial({0, 6, 12}).divided_exactly(6), IntPolynomial({0, 1, 2}));
    EXPECT_THROW(IntPolynomial({0, 3}).divided_exactly(2), std::domain_error);
}

TEST(IntPolynomial, EvaluateDetectsOverflow) {
    IntPolynomial p({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    EXPECT_EQ(p.evaluate(2), 1 << 20);
    EXPECT_THROW(p.evaluate(std::int64_t(1) << 4), heaps::OverflowError);
    IntPolynomial big({std::numeric_limits<std::int64_t>::max()});
    EXPECT_THROW(big + IntPolynomial::constant(1), heaps::OverflowError);
}

TEST(IntPolynomial, Json) {
    IntPolynomial k3({0, 2, -3, 1});
    EXPECT_EQ(k3.to_json().dump(), R"({"coeffs":[0,2,-3,1]})");
    EXPECT_EQ(IntPolynomial::parse_json(R"({"coeffs": [0, 2, -3, 1, 0]})"), k3);
    EXPECT_THROW(IntPolynomial::parse_json("{\"coeffs\": [1.5]}"), heaps::ParseError);
    EXPECT_THROW(IntPolynomial::parse_json("[1, 2]"), heaps::ParseError);
    EXPECT_THROW(IntPolynomial::parse_json("{"), heaps::ParseError);
}

TEST(IntPolynomial, ToString) {
    EXPECT_EQ(IntPolynomial({0, 2, -3, 1}).to_string(), "λ^3 - 3λ^2 + 2λ");
    EXPECT_EQ(IntPolynomial({-1, 0, -1}).to_string(), "-λ^2 - 1");
    EXPECT_EQ(IntPolynomial().to_string(), "0");
}
