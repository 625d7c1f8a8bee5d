#include <gtest/gtest.h>

#include "dch/clifford.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dch;

TEST(Clifford, BladeProductMatchesGeneratorWordReduction) {
  for (int d = 1; d <= 5; ++d)
    for (Blade a = 0; a < (Blade{1} << d); ++a)
      for (Blade b = 0; b < (Blade{1} << d); ++b) {
        const auto [sign, mask] = oracle::blade_product(a, b);
        const Multivector got = Multivector::blade(d, a) * Multivector::blade(d, b);
        EXPECT_EQ(got, Multivector::blade(d, mask, sign)) << "d=" << d << " a=" << a << " b=" << b;
      }
}

TEST(Clifford, GeneratorsAnticommuteAndSquareToMinusOne) {
  const int d = 4;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      const Multivector ei = Multivector::basis_vector(d, i), ej = Multivector::basis_vector(d, j);
      EXPECT_EQ(ei * ej + ej * ei, Multivector::scalar(d, i == j ? -2 : 0));
    }
}

TEST(Clifford, ProductMatchesOracleOnRandomMultivectors) {
  gen::for_all(11, 200, [](gen::Gen& g, int) {
    const int d = g.integer(1, 5);
    const Multivector a = g.multivector(d, 5), b = g.multivector(d, 5);
    EXPECT_EQ(a * b, oracle::product(a, b));
  });
}

TEST(Clifford, ProductIsAssociativeAndDistributive) {
  gen::for_all(12, 200, [](gen::Gen& g, int) {
    const int d = g.integer(1, 5);
    const Multivector a = g.multivector(d), b = g.multivector(d), c = g.multivector(d);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
  });
}

TEST(Clifford, ConjugationIsAnAntiInvolution) {
  gen::for_all(13, 200, [](gen::Gen& g, int) {
    const int d = g.integer(1, 5);
    const Multivector a = g.multivector(d), b = g.multivector(d);
    EXPECT_EQ(conjugate(conjugate(a)), a);
    EXPECT_EQ(conjugate(a * b), conjugate(b) * conjugate(a));
  });
  EXPECT_EQ(conjugate(Multivector::basis_vector(3, 2)), -Multivector::basis_vector(3, 2));
}

TEST(Clifford, ScalarPartOfConjugateProductIsEuclideanPairing) {
  gen::for_all(14, 200, [](gen::Gen& g, int) {
    const int d = g.integer(1, 5);
    const Multivector f = g.multivector(d, 6), h = g.multivector(d, 6);
    Rational expected = 0;
    for (Blade b = 0; b < (Blade{1} << d); ++b) expected += f.coefficient(b) * h.coefficient(b);
    EXPECT_EQ((conjugate(f) * h).scalar_part(), expected);
  });
}

TEST(Clifford, VectorInverse) {
  gen::for_all(15, 100, [](gen::Gen& g, int) {
    const int d = g.integer(1, 5);
    const Multivector x = Multivector::vector(g.nonzero_vec(d));
    EXPECT_EQ(x * vector_inverse(x), Multivector::scalar(d, 1));
    EXPECT_EQ(x * x, Multivector::scalar(d, -dot(x.vector_part(), x.vector_part())));
  });
  EXPECT_THROW(vector_inverse(Multivector(3)), std::domain_error);
  EXPECT_THROW(vector_inverse(Multivector::scalar(3, 1)), std::invalid_argument);
}

TEST(Clifford, SandwichReflectionAgreesWithEuclideanFormula) {
  gen::for_all(16, 100, [](gen::Gen& g, int) {
    const int d = g.integer(1, 5);
    const RationalVector a = g.nonzero_vec(d), x = g.vec(d);
    const RationalVector y = reflect_vector(x, a);
    EXPECT_EQ(y, reflect_vector_clifford(x, a));
    EXPECT_EQ(y, oracle::reflect_point(x, a));
    EXPECT_EQ(reflect_vector(y, a), x);
    EXPECT_EQ(dot(y, y), dot(x, x));
  });
}

TEST(Clifford, MismatchedDimensionsThrow) {
  EXPECT_THROW(Multivector(2) + Multivector::scalar(3, 1), dimension_mismatch);
  EXPECT_THROW(Multivector::scalar(2, 1) * Multivector::scalar(3, 1), dimension_mismatch);
  EXPECT_THROW(Multivector::basis_vector(2, 3), std::invalid_argument);
}
