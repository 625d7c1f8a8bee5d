#include <gtest/gtest.h>

#include "dch/multipoly.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dch;

TEST(Multipoly, ProductEvaluatesPointwise) {
  gen::for_all(21, 150, [](gen::Gen& g, int) {
    const int d = g.integer(1, 4);
    const CPoly p = g.cpoly(d, 3), q = g.cpoly(d, 3);
    const RationalVector x = g.vec(d);
    EXPECT_EQ(oracle::eval(p * q, x), oracle::eval(p, x) * oracle::eval(q, x));
    EXPECT_EQ(oracle::eval(p + q, x), oracle::eval(p, x) + oracle::eval(q, x));
  });
}

TEST(Multipoly, DerivativeMatchesInterpolatedDerivative) {
  gen::for_all(22, 150, [](gen::Gen& g, int) {
    const int d = g.integer(1, 4);
    const CPoly p = g.cpoly(d, 4);
    const RationalVector x = g.vec(d);
    const int i = g.integer(0, d - 1);
    EXPECT_EQ(oracle::eval(p.derivative(i), x), oracle::partial_at(p, i, x));
  });
}

TEST(Multipoly, DerivativeObeysLeibniz) {
  gen::for_all(23, 100, [](gen::Gen& g, int) {
    const int d = g.integer(1, 4);
    const SPoly a = g.spoly(d, 3);
    const CPoly b = g.cpoly(d, 3);
    const int i = g.integer(0, d - 1);
    EXPECT_EQ((a * b).derivative(i), a.derivative(i) * b + a * b.derivative(i));
  });
}

TEST(Multipoly, ReflectionComposesWithEvaluation) {
  gen::for_all(24, 150, [](gen::Gen& g, int) {
    const int d = g.integer(1, 4);
    const CPoly p = g.cpoly(d, 3);
    const RationalVector a = g.nonzero_vec(d), x = g.vec(d);
    EXPECT_EQ(oracle::eval(poly_reflect(p, a), x), oracle::eval(p, oracle::reflect_point(x, a)));
  });
}

TEST(Multipoly, DividedDifferenceIsExactQuotient) {
  gen::for_all(25, 150, [](gen::Gen& g, int) {
    const int d = g.integer(1, 4);
    const CPoly p = g.cpoly(d, 4);
    const RationalVector a = g.nonzero_vec(d);
    const CPoly q = poly_divided_difference(p, a);
    EXPECT_EQ(linear_form(a) * q, p - poly_reflect(p, a));
  });
}

TEST(Multipoly, VectorVariableSquaresToMinusNormSquared) {
  for (int d = 1; d <= 5; ++d) {
    EXPECT_EQ(x_poly(d) * x_poly(d), lift(norm_squared_poly(d)) * Rational(-1));
    EXPECT_EQ(x_power(d, 2), lift(norm_squared_poly(d)) * Rational(-1));
    EXPECT_EQ(x_power(d, 3), x_power(d, 2) * x_poly(d));
  }
}

TEST(Multipoly, RadialDecomposeRoundTrips) {
  gen::for_all(26, 100, [](gen::Gen& g, int) {
    const int d = g.integer(1, 4);
    const CPoly base = g.homogeneous(d, g.integer(0, 2));
    RationalVector a(static_cast<std::size_t>(g.integer(1, 5)));
    for (auto& c : a) c = g.rational();
    a.back() = g.nonzero_rational();
    const CPoly p = radial_reconstruct(a, base);
    EXPECT_EQ(radial_decompose(p, base), a);
  });
}

TEST(Multipoly, RadialDecomposeRejectsForeignPolynomials) {
  const int d = 2;
  const CPoly base = CPoly::constant(d, Multivector::scalar(d, 1));
  const CPoly x1 = lift(variable(d, 0));
  EXPECT_THROW(radial_decompose(x1, base), decomposition_error);
  EXPECT_THROW(radial_decompose(base, x1), decomposition_error);
  EXPECT_THROW(radial_decompose(base, CPoly(d)), std::invalid_argument);
}

TEST(Multipoly, HomogeneityAndDegrees) {
  const int d = 3;
  SPoly p = variable(d, 0) * variable(d, 1) + variable(d, 2) * variable(d, 2);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.degree_in(2), 2);
  p += SPoly::constant(d, 1);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.homogeneous_part(0), SPoly::constant(d, 1));
}

TEST(Multipoly, MonomialCountIsStarsAndBars) {
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n)
      EXPECT_EQ(Rational(monomials_of_degree(d, n).size()), binomial(n + d - 1, d - 1));
}

TEST(Multipoly, ConjugationActsOnCoefficients) {
  gen::for_all(27, 50, [](gen::Gen& g, int) {
    const int d = g.integer(1, 4);
    const CPoly p = g.cpoly(d, 3);
    const RationalVector x = g.vec(d);
    EXPECT_EQ(oracle::eval(conjugate(p), x), conjugate(oracle::eval(p, x)));
  });
}

TEST(Multipoly, MismatchedDimensionsThrow) {
  EXPECT_THROW(x_poly(2) + x_poly(3), dimension_mismatch);
  EXPECT_THROW(x_poly(2) * x_poly(3), dimension_mismatch);
}
