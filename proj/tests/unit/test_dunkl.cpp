#include <gtest/gtest.h>

#include "dch/dunkl.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dch;

namespace {

ReflectionData random_group(gen::Gen& g) {
  switch (g.integer(0, 3)) {
    case 0: return g.z2(g.integer(1, 3));
    case 1: return build_group(Family::A, 3, {g.positive_kappa()});
    case 2: return build_group(Family::B, 2, {g.positive_kappa(), g.nonnegative_kappa()});
    default: return build_group(Family::I2, 4, {g.nonnegative_kappa(), g.positive_kappa()});
  }
}

// A point off every mirror.
RationalVector generic_point(gen::Gen& g, const ReflectionData& rd) {
  while (true) {
    RationalVector x = g.vec(rd.d);
    bool ok = true;
    for (const auto& a : rd.positive_roots) ok = ok && dot(a, x) != 0;
    if (ok) return x;
  }
}

}  // namespace

TEST(Dunkl, OperatorMatchesPointwiseDefinition) {
  gen::for_all(51, 60, [](gen::Gen& g, int) {
    const ReflectionData rd = random_group(g);
    const DunklOperators ops(rd);
    const CPoly f = g.cpoly(rd.d, 4);
    const RationalVector x = generic_point(g, rd);
    for (int i = 1; i <= rd.d; ++i) EXPECT_EQ(oracle::eval(ops.T(i, f), x), oracle::dunkl_T_at(rd, i, f, x)) << rd.describe();
    EXPECT_EQ(oracle::eval(ops.dirac(f), x), oracle::dirac_at(rd, f, x));
  });
}

TEST(Dunkl, OperatorsCommute) {
  gen::for_all(52, 40, [](gen::Gen& g, int) {
    const ReflectionData rd = random_group(g);
    const DunklOperators ops(rd);
    const CPoly f = g.cpoly(rd.d, 4);
    for (int i = 1; i <= rd.d; ++i)
      for (int j = i + 1; j <= rd.d; ++j) EXPECT_EQ(ops.T(i, ops.T(j, f)), ops.T(j, ops.T(i, f))) << rd.describe();
  });
}

TEST(Dunkl, DiracSquaresToMinusLaplacian) {
  gen::for_all(53, 40, [](gen::Gen& g, int) {
    const ReflectionData rd = random_group(g);
    const DunklOperators ops(rd);
    const CPoly f = g.cpoly(rd.d, 4);
    EXPECT_EQ(ops.dirac(ops.dirac(f)), ops.laplacian(f) * Rational(-1));
  });
}

TEST(Dunkl, DiracOfVectorVariableIsMinusMu) {
  gen::for_all(54, 30, [](gen::Gen& g, int) {
    const ReflectionData rd = random_group(g);
    EXPECT_EQ(dunkl_dirac(rd, x_poly(rd.d)), CPoly::constant(rd.d, Multivector::scalar(rd.d, -rd.mu)));
  });
}

TEST(Dunkl, ProductRuleForInvariantFactor) {
  // T_i(|x|^2 f) = 2 x_i f + |x|^2 T_i f because |x|^2 is W-invariant.
  gen::for_all(55, 30, [](gen::Gen& g, int) {
    const ReflectionData rd = random_group(g);
    const DunklOperators ops(rd);
    const CPoly f = g.cpoly(rd.d, 3);
    const SPoly r2 = norm_squared_poly(rd.d);
    for (int i = 1; i <= rd.d; ++i)
      EXPECT_EQ(ops.T(i, r2 * f), variable(rd.d, i - 1) * f * Rational(2) + r2 * ops.T(i, f));
  });
}

TEST(Dunkl, LowersDegreeByOne) {
  gen::for_all(56, 30, [](gen::Gen& g, int) {
    const ReflectionData rd = random_group(g);
    const int m = g.integer(1, 4);
    const CPoly f = g.homogeneous(rd.d, m);
    const CPoly df = dunkl_dirac(rd, f);
    if (!df.is_zero()) {
      EXPECT_TRUE(df.is_homogeneous());
      EXPECT_EQ(df.degree(), m - 1);
    }
  });
}

TEST(Dunkl, GaussianDressedDiracIsProductRule) {
  gen::for_all(57, 30, [](gen::Gen& g, int) {
    const ReflectionData rd = random_group(g);
    const DunklOperators ops(rd);
    const CPoly p = g.cpoly(rd.d, 3);
    const GaussianDressed out = ops.gaussian_dirac(GaussianDressed::standard(p));
    EXPECT_EQ(out.poly, ops.d_plus(p));
  });
}

TEST(Dunkl, RadialFactorCommutesWithReflections) {
  const ReflectionData rd = build_group(Family::A, 3, {frac(1, 2)});
  const DunklOperators ops(rd);
  const CPoly r2 = lift(norm_squared_poly(3));
  for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) EXPECT_EQ(ops.reflect(r, r2), r2);
}

TEST(Dunkl, RejectsWrongDimension) {
  const DunklOperators ops(build_group(Family::Z2, 2, {1}));
  EXPECT_THROW(ops.dirac(x_poly(3)), dimension_mismatch);
  EXPECT_THROW(ops.T(3, x_poly(2)), std::invalid_argument);
}
