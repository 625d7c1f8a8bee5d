#include <gtest/gtest.h>

#include "dch/io.hpp"
#include "support/generators.hpp"

using namespace dch;

TEST(Io, MultivectorRoundTrip) {
  gen::for_all(111, 100, [](gen::Gen& g, int) {
    const Multivector m = g.multivector(g.integer(1, 5), 6);
    EXPECT_EQ(multivector_from_json(Json::parse(to_json(m).dump())), m);
  });
}

TEST(Io, PolynomialRoundTrip) {
  gen::for_all(112, 100, [](gen::Gen& g, int) {
    const CPoly p = g.cpoly(g.integer(1, 4), 5, 6);
    EXPECT_EQ(cpoly_from_json(Json::parse(to_json(p).dump())), p);
  });
}

TEST(Io, GammaExprRoundTripThroughTermsAndText) {
  const GammaExpr e = GammaExpr::gamma(frac(7, 3)) * GammaExpr::pi_half_power(3) * Rational(-5) + GammaExpr::rational(frac(1, 7));
  const Json j = Json::parse(to_json(e).dump());
  EXPECT_EQ(gamma_expr_from_json(j), e);
  EXPECT_EQ(gamma_expr_from_json(j.at("text")), e);
}

TEST(Io, BladeIndicesAreOneBasedAndIncreasing) {
  EXPECT_EQ(blade_to_json(0b101), Json::parse("[1,3]"));
  EXPECT_EQ(blade_from_json(Json::parse("[1,3]"), 3), Blade{0b101});
  EXPECT_THROW(blade_from_json(Json::parse("[3,1]"), 3), std::invalid_argument);
  EXPECT_THROW(blade_from_json(Json::parse("[2,2]"), 3), std::invalid_argument);
  EXPECT_THROW(blade_from_json(Json::parse("[0]"), 3), std::invalid_argument);
  EXPECT_THROW(blade_from_json(Json::parse("[4]"), 3), std::invalid_argument);
}

TEST(Io, MalformedPolynomialJson) {
  EXPECT_THROW(cpoly_from_json(Json::parse(R"({"d":2,"terms":[{"monomial":[1],"coeff":{"d":2,"terms":[]}}]})")),
               std::invalid_argument);
  EXPECT_THROW(cpoly_from_json(Json::parse(R"({"d":2,"terms":[{"monomial":[1,0],"coeff":{"d":3,"terms":[]}}]})")),
               std::invalid_argument);
  EXPECT_THROW(cpoly_from_json(Json::parse(R"({"d":2,"terms":[{"monomial":[-1,0],"coeff":{"d":2,"terms":[]}}]})")),
               std::invalid_argument);
}

TEST(Io, TextForms) {
  const int d = 2;
  Multivector m = Multivector::scalar(d, 1) + Multivector::blade(d, 0b11, frac(-3, 4));
  EXPECT_EQ(to_text(m), "1 - 3/4 e1e2");
  EXPECT_EQ(to_text(Multivector(d)), "0");
  EXPECT_EQ(to_text(x_poly(d)), "(e2) x2 + (e1) x1");
  EXPECT_EQ(to_json(RationalVector{1, frac(-2, 3)}), Json::parse(R"(["1","-2/3"])"));
}
