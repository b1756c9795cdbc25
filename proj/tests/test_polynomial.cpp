#include <gtest/gtest.h>

#include "cheb/errors.hpp"
#include "cheb/polynomial.hpp"
#include "oracles.hpp"

using namespace cheb;

TEST(IntPolynomial, TrimAndDegree) {
  EXPECT_EQ(IntPolynomial({0, 0, 0}).degree(), -1);
  EXPECT_TRUE(IntPolynomial({0}).is_zero());
  EXPECT_EQ(IntPolynomial({1, 2, 0}).degree(), 1);
}

TEST(IntPolynomial, Arithmetic) {
  const IntPolynomial a{1, 1};   // x + 1
  const IntPolynomial b{-1, 1};  // x - 1
  EXPECT_EQ(a * b, IntPolynomial({-1, 0, 1}));
  EXPECT_EQ(a + b, IntPolynomial({0, 2}));
  EXPECT_EQ(a - a, IntPolynomial{});
  EXPECT_EQ(a * Integer(3), IntPolynomial({3, 3}));
}

TEST(IntPolynomial, DivideExact) {
  const IntPolynomial x2m1{-1, 0, 1};
  EXPECT_EQ(x2m1.divide_exact(IntPolynomial{-1, 1}), IntPolynomial({1, 1}));
  EXPECT_THROW(IntPolynomial({1, 0, 1}).divide_exact(IntPolynomial{-1, 1}), DomainError);
}

TEST(IntPolynomial, ScaleAndEvaluate) {
  const IntPolynomial p{1, 1, 1};
  EXPECT_EQ(p.scale_argument(2), IntPolynomial({1, 2, 4}));
  EXPECT_EQ(p.evaluate_mod(3, 5), 3u);  // 13 mod 5
}

TEST(IntPolynomial, Text) {
  EXPECT_EQ(chebyshev_t(4).to_string(), "8x^4 - 8x^2 + 1");
  EXPECT_EQ(IntPolynomial({-1, 1}).to_string(), "x - 1");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
}

TEST(ChebyshevT, SmallDegrees) {
  EXPECT_EQ(chebyshev_t(0), IntPolynomial({1}));
  EXPECT_EQ(chebyshev_t(2), IntPolynomial({-1, 0, 2}));
  EXPECT_EQ(chebyshev_t(5), IntPolynomial({0, 5, 0, -20, 0, 16}));
}

TEST(ChebyshevT, MatchesOracleCoefficients) {
  for (std::size_t n = 0; n <= 80; ++n) {
    EXPECT_EQ(chebyshev_t(n).coefficients(), oracle::cheb_coefficients(n)) << n;
  }
}

TEST(ModPolynomial, ShiftMatchesBinomialExpansion) {
  // (x + 1)^3 mod 7
  const ModPolynomial cube = ModPolynomial::monomial(1, 3, 7);
  EXPECT_EQ(cube.shift(1), ModPolynomial({1, 3, 3, 1}, 7));
  EXPECT_EQ(ModPolynomial({5, 6}, 7) + ModPolynomial({3, 1}, 7), ModPolynomial({1}, 7));
  EXPECT_EQ(ModPolynomial({5, 6}, 7) - ModPolynomial({5, 6}, 7), ModPolynomial({}, 7));
}
