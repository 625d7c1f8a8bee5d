#include <gtest/gtest.h>

#include "dch/monogenic.hpp"
#include "support/generators.hpp"

using namespace dch;

namespace {

std::size_t expected_rank(int n, int d) { return binomial(n + d - 2, n).get_num().get_ui(); }

}  // namespace

TEST(Monogenic, KernelElementsAreHomogeneousMonogenics) {
  gen::for_all(81, 8, [](gen::Gen& g, int) {
    const ReflectionData rd = g.coin() ? g.z2(g.integer(2, 3)) : build_group(Family::A, 3, {g.positive_kappa()});
    const DunklOperators ops(rd);
    const int n = g.integer(0, 3);
    for (const auto& p : monogenic_kernel(ops, n)) {
      EXPECT_TRUE(p.is_homogeneous());
      EXPECT_EQ(p.degree(), n);
      EXPECT_TRUE(ops.dirac(p).is_zero());
    }
  });
}

TEST(Monogenic, ModuleRankMatchesBinomial) {
  const std::vector<ReflectionData> groups = {build_group(Family::Z2, 2, {frac(1, 2), frac(1, 3)}),
                                              build_group(Family::Z2, 3, {frac(3, 2), frac(1, 2), 1}),
                                              build_group(Family::A, 3, {1}), build_group(Family::B, 2, {1, frac(1, 2)})};
  for (const auto& rd : groups)
    for (int n = 0; n <= 3; ++n) {
      const MonogenicBasis b = module_basis(rd, n);
      EXPECT_EQ(b.expected_rank, expected_rank(n, rd.d));
      EXPECT_TRUE(b.rank_matches()) << rd.describe() << " n=" << n;
      EXPECT_EQ(b.kernel_dimension, (std::size_t{1} << rd.d) * b.expected_rank) << rd.describe() << " n=" << n;
    }
}

TEST(Monogenic, DegreeZeroIsConstants) {
  const MonogenicBasis b = module_basis(build_group(Family::Z2, 2, {1, 1}), 0);
  ASSERT_EQ(b.elements.size(), 1u);
  EXPECT_EQ(b.elements.front().degree(), 0);
  EXPECT_EQ(b.kernel_dimension, 4u);
}

TEST(Monogenic, OrthogonalizedGramIsDiagonal) {
  gen::for_all(82, 6, [](gen::Gen& g, int) {
    const ReflectionData rd = g.z2(g.integer(2, 3));
    const int n = g.integer(1, 3);
    const MonogenicBasis b = orthonormalize_z2(module_basis(rd, n));
    ASSERT_TRUE(b.orthogonal);
    const Z2Integrator integ(rd);
    for (std::size_t i = 0; i < b.elements.size(); ++i)
      for (std::size_t j = 0; j < b.elements.size(); ++j) {
        EXPECT_EQ(b.gram[i][j], integ.spherical_pairing(b.elements[i], b.elements[j]));
        if (i != j) {
          EXPECT_TRUE(b.gram[i][j].is_zero());
        } else {
          EXPECT_GT(b.gram[i][j].to_double(), 0.0);
        }
      }
    for (const auto& p : b.elements) EXPECT_TRUE(DunklOperators(rd).dirac(p).is_zero());
  });
}

TEST(Monogenic, NegativeDegreeThrows) {
  EXPECT_THROW(monogenic_kernel(build_group(Family::Z2, 2, {1}), -1), std::invalid_argument);
}
