#include <gtest/gtest.h>

#include <cmath>

#include "dch/integrate.hpp"
#include "dch/monogenic.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dch;

namespace {

ReflectionData z2_from_menu(gen::Gen& g, int d) {
  static const Rational menu[] = {frac(1, 2), frac(1, 3), 1, frac(3, 2), 2};
  RationalVector k(d);
  for (auto& c : k) c = menu[g.integer(0, 4)];
  return build_group(Family::Z2, d, k);
}

}  // namespace

TEST(Integrate, MomentsMatchOneDimensionalQuadrature) {
  gen::for_all(71, 40, [](gen::Gen& g, int) {
    const int d = g.integer(1, 3);
    const ReflectionData rd = z2_from_menu(g, d);
    const Z2Integrator integ(rd);
    const Monomial m = g.monomial(d, g.integer(0, 6));
    double expected = 1.0;
    for (int i = 0; i < d; ++i)
      expected *= m[i] % 2 ? 0.0 : oracle::moment_1d(m[i] + 2 * rd.kappa[i].get_d());
    const double got = integ.moment(m).to_double();
    EXPECT_NEAR(got, expected, 1e-8 * std::max(1.0, std::abs(expected)));
  });
}

TEST(Integrate, HalfMultiplicityMomentsAreFactorials) {
  // int t^{2k} |t| e^{-t^2} dt = k!.
  const Z2Integrator integ(build_group(Family::Z2, 1, {frac(1, 2)}));
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(integ.moment(Monomial::from(std::vector<int>{2 * k})), GammaExpr::rational(factorial(k)));
}

TEST(Integrate, PairingIsSymmetricAndPositive) {
  gen::for_all(72, 60, [](gen::Gen& g, int) {
    const int d = g.integer(1, 3);
    const Z2Integrator integ(z2_from_menu(g, d));
    const CPoly f = g.cpoly(d, 3), h = g.cpoly(d, 3);
    EXPECT_EQ(integ.inner_product(f, h), integ.inner_product(h, f));
    EXPECT_EQ(integ.inner_product_full(f, h).scalar_part(), integ.inner_product(f, h));
    if (!f.is_zero()) {
      EXPECT_GT(integ.scalar_pairing_ratio(f, f), 0);
    }
  });
}

TEST(Integrate, PairingIsBilinear) {
  gen::for_all(73, 40, [](gen::Gen& g, int) {
    const int d = g.integer(1, 3);
    const Z2Integrator integ(z2_from_menu(g, d));
    const CPoly f = g.cpoly(d, 3), h = g.cpoly(d, 3), k = g.cpoly(d, 3);
    const Rational c = g.rational();
    EXPECT_EQ(integ.scalar_pairing_ratio(f * c + h, k), c * integ.scalar_pairing_ratio(f, k) + integ.scalar_pairing_ratio(h, k));
  });
}

TEST(Integrate, RadialPairingClosedForm) {
  gen::for_all(74, 12, [](gen::Gen& g, int) {
    const int d = g.integer(2, 3);
    const ReflectionData rd = z2_from_menu(g, d);
    const Z2Integrator integ(rd);
    const int n = g.integer(0, 2);
    const MonogenicBasis basis = module_basis(rd, n);
    const CPoly& p = basis.elements.front();
    const GammaExpr norm = integ.spherical_pairing(p, p);
    for (int s = 0; s <= 5; ++s)
      for (int t = 0; t <= 5; ++t) {
        const GammaExpr direct = integ.inner_product(x_power(d, s) * p, x_power(d, t) * p);
        EXPECT_EQ(direct, radial_pairing_closed_form(s, t, n, rd.mu, norm)) << "s=" << s << " t=" << t;
      }
  });
}

TEST(Integrate, RaisingIsAdjointToDirac) {
  gen::for_all(75, 20, [](gen::Gen& g, int) {
    const int d = g.integer(2, 3);
    const ReflectionData rd = z2_from_menu(g, d);
    const MonogenicBasis basis = module_basis(rd, g.integer(0, 2));
    RationalVector p(g.integer(1, 5)), q(g.integer(1, 5));
    for (auto& c : p) c = g.rational();
    for (auto& c : q) c = g.rational();
    const AdjointSides sides = adjoint_sides(DunklOperators(rd), Z2Integrator(rd), p, q, basis.elements.front());
    EXPECT_EQ(sides.raised, sides.lowered);
  });
}

TEST(Integrate, SphericalPairingNeedsHomogeneousInput) {
  const Z2Integrator integ(build_group(Family::Z2, 2, {1, 1}));
  EXPECT_THROW(integ.spherical_pairing(x_poly(2) + CPoly::constant(2, Multivector::scalar(2, 1)), x_poly(2)),
               std::invalid_argument);
}

TEST(Integrate, RejectsNonProductWeights) {
  EXPECT_THROW(Z2Integrator(build_group(Family::A, 3, {1})), unsupported_group);
  EXPECT_THROW(Z2Integrator(build_group(Family::Z2, 2, {1})).inner_product(x_poly(3), x_poly(3)), dimension_mismatch);
  EXPECT_THROW(radial_pairing_closed_form(-1, 0, 0, 3, GammaExpr::rational(1)), std::invalid_argument);
}
