#pragma once

// Squared norms gamma_{s,mu,n} of the Hermite family in the Gaussian-Dunkl
// Hilbert module, computed three ways: by direct integration, from the
// closed form, and by the ladder C(s) C(s-1) ... C(1) (P, P)_H.

#include "dch/gamma_expr.hpp"
#include "dch/hermite.hpp"
#include "dch/integrate.hpp"
#include "dch/monogenic.hpp"

namespace dch {

/// 4^s (s/2)! pi^{d/2} Gamma((s+mu)/2 + n) / Gamma(d/2) for even s,
/// 4^s ((s-1)/2)! pi^{d/2} Gamma((s+mu+1)/2 + n) / Gamma(d/2) for odd s.
inline GammaExpr hermite_norm_closed_form(int s, const Rational& mu, int n, int d) {
  const int half = s / 2;
  const Rational arg = (mu + s + s % 2) / 2 + n;
  return GammaExpr::rational(pow(Rational(4), s) * factorial(half)) * GammaExpr::pi_half_power(d) *
         GammaExpr::gamma(arg) / GammaExpr::gamma(frac(d, 2));
}

struct HermiteNorm {
  GammaExpr raw;              // (H_s, H_s)_H
  GammaExpr sphere_averaged;  // raw with P normalized by (1/|S|) int |P|^2 h^2 dSigma = 1
  GammaExpr unit_sphere;      // raw with P normalized by int |P|^2 h^2 dSigma = 1
  GammaExpr closed_form;
  GammaExpr ladder;           // C(s) ... C(1) (P, P)_H, same normalization as sphere_averaged

  bool sphere_averaged_matches() const { return sphere_averaged == closed_form; }
  bool unit_sphere_matches() const { return unit_sphere == closed_form; }
  bool ladder_matches() const { return ladder == sphere_averaged; }
};

/// p_norm is the spherical norm of P_n, e.g. MonogenicBasis::norm(j).
inline HermiteNorm gamma_norm(const HermiteFamily& f, const GammaExpr& p_norm, int s) {
  if (s < 0 || s > f.max_s) throw std::out_of_range("s outside the generated family");
  const Z2Integrator integ(f.rd);
  const int d = f.rd.d;
  HermiteNorm out;
  const CPoly& h = f.polys[static_cast<std::size_t>(s)];
  out.raw = integ.inner_product(h, h);
  out.unit_sphere = out.raw / p_norm;
  out.sphere_averaged = out.unit_sphere * sphere_area(d);
  Rational chain = 1;
  for (int k = 1; k <= s; ++k) chain *= c_coefficient(k, f.mu, f.n);
  out.ladder = integ.inner_product(f.p, f.p) / p_norm * sphere_area(d) * chain;
  out.closed_form = hermite_norm_closed_form(s, f.mu, f.n, d);
  return out;
}

inline HermiteNorm gamma_norm(const HermiteFamily& f, const MonogenicBasis& basis, int s, std::size_t j) {
  if (!basis.orthogonal) throw std::invalid_argument("basis has no stored norms; orthogonalize it first");
  return gamma_norm(f, basis.norm(j), s);
}

}  // namespace dch
