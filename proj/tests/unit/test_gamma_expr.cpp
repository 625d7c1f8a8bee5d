#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dch/gamma_expr.hpp"
#include "support/generators.hpp"

using namespace dch;

TEST(GammaExpr, IntegerAndHalfIntegerArgumentsReduce) {
  EXPECT_EQ(GammaExpr::gamma(1), GammaExpr::rational(1));
  EXPECT_EQ(GammaExpr::gamma(5), GammaExpr::rational(24));
  EXPECT_EQ(GammaExpr::gamma(frac(1, 2)), GammaExpr::pi_half_power(1));
  EXPECT_EQ(GammaExpr::gamma(frac(5, 2)), GammaExpr::rational(frac(3, 4)) * GammaExpr::pi_half_power(1));
  EXPECT_EQ(GammaExpr::gamma(frac(-1, 2)), GammaExpr::rational(-2) * GammaExpr::pi_half_power(1));
  EXPECT_EQ(GammaExpr::gamma(frac(7, 3)), GammaExpr::rational(frac(4, 9)) * GammaExpr::gamma(frac(1, 3)));
}

TEST(GammaExpr, PolesThrow) {
  EXPECT_THROW(GammaExpr::gamma(0), std::domain_error);
  EXPECT_THROW(GammaExpr::gamma(-3), std::domain_error);
}

TEST(GammaExpr, FloatValueMatchesTgamma) {
  gen::for_all(61, 200, [](gen::Gen& g, int) {
    Rational z;
    do z = g.rational(9, 6);
    while (is_integer(z) && z <= 0);
    const double expected = std::tgamma(z.get_d());
    EXPECT_NEAR(GammaExpr::gamma(z).to_double(), expected, 1e-12 * std::abs(expected)) << to_string(z);
  });
  EXPECT_NEAR(GammaExpr::pi_half_power(3).to_double(), std::pow(std::numbers::pi, 1.5), 1e-13);
}

TEST(GammaExpr, FunctionalEquationIsSyntactic) {
  gen::for_all(62, 100, [](gen::Gen& g, int) {
    Rational z;
    do z = g.rational(8, 5);
    while (is_integer(z) && z <= 0);
    if (is_integer(z + 1) && z + 1 <= 0) return;
    EXPECT_EQ(GammaExpr::gamma(z + 1), z * GammaExpr::gamma(z));
  });
}

TEST(GammaExpr, RingOperations) {
  const GammaExpr a = GammaExpr::gamma(frac(1, 3)) * GammaExpr::pi_half_power(2);
  const GammaExpr b = GammaExpr::gamma(frac(2, 3));
  EXPECT_EQ(a / a, GammaExpr::rational(1));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a + b) * Rational(2), a * Rational(2) + b * Rational(2));
  EXPECT_EQ((a * Rational(-3)).ratio_to(a), Rational(-3));
  EXPECT_FALSE(a.ratio_to(b).has_value());
  EXPECT_THROW((a + b).inverse(), std::domain_error);
}

TEST(GammaExpr, SphereArea) {
  EXPECT_NEAR(sphere_area(2).to_double(), 2 * std::numbers::pi, 1e-13);
  EXPECT_NEAR(sphere_area(3).to_double(), 4 * std::numbers::pi, 1e-13);
  EXPECT_NEAR(sphere_area(4).to_double(), 2 * std::numbers::pi * std::numbers::pi, 1e-12);
}

TEST(GammaExpr, TextRoundTrip) {
  gen::for_all(63, 100, [](gen::Gen& g, int) {
    GammaExpr e;
    for (int k = 0; k < g.integer(1, 3); ++k) {
      GammaExpr t = GammaExpr::rational(g.nonzero_rational()) * GammaExpr::pi_half_power(g.integer(-3, 3));
      for (int j = 0; j < g.integer(0, 2); ++j) t = t * GammaExpr::gamma(frac(g.integer(1, 11), g.integer(2, 5)));
      e += t;
    }
    EXPECT_EQ(GammaExpr::parse(e.to_string()), e) << e.to_string();
  });
  EXPECT_TRUE(GammaExpr::parse("0").is_zero());
  EXPECT_EQ(GammaExpr::parse("3 * Gamma(7/2)"), GammaExpr::gamma(frac(7, 2)) * Rational(3));
  EXPECT_THROW(GammaExpr::parse("2 * Beta(1)"), std::invalid_argument);
}
