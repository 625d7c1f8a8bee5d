#pragma once

// Exact Gaussian-Dunkl integrals for the group Z2^d, where the weight
// h_kappa^2 = prod_i |x_i|^{2 kappa_i} factorizes and
//
//   int_{R^d} x^b e^{-|x|^2} h_kappa^2 dx = prod_i Gamma((b_i + 2 kappa_i + 1)/2)
//
// for all b_i even (zero otherwise).  Every such moment is a rational multiple
// of base = prod_i Gamma(kappa_i + 1/2), so pairings are accumulated as
// rationals and multiplied by base at the end.

#include <map>
#include <utility>
#include <vector>

#include "dch/dunkl.hpp"
#include "dch/errors.hpp"
#include "dch/gamma_expr.hpp"
#include "dch/multipoly.hpp"
#include "dch/reflection.hpp"

namespace dch {

/// A Clifford-valued integral: coeffs * base.
struct CliffordGammaValue {
  Multivector coeffs;
  GammaExpr base;

  GammaExpr component(Blade b) const { return base * coeffs.coefficient(b); }
  GammaExpr scalar_part() const { return component(0); }
  bool is_zero() const { return coeffs.is_zero() || base.is_zero(); }
};

class Z2Integrator {
 public:
  explicit Z2Integrator(const ReflectionData& rd) : d_(rd.d), mu_(rd.mu), kappa_(rd.d) {
    if (!rd.is_z2()) throw unsupported_group("exact integration is implemented for Z2^d only");
    base_ = GammaExpr::rational(1);
    for (int i = 0; i < d_; ++i) {
      kappa_[i] = rd.kappa[i];
      base_ = base_ * GammaExpr::gamma(kappa_[i] + frac(1, 2));
    }
    tables_.resize(d_);
  }

  int dimension() const { return d_; }
  const Rational& mu() const { return mu_; }

  /// prod_i Gamma(kappa_i + 1/2).
  const GammaExpr& base() const { return base_; }

  /// Moment of x^m divided by base; zero unless every exponent is even.
  Rational moment_ratio(const Monomial& m) const {
    Rational r = 1;
    for (int i = 0; i < d_; ++i) {
      if (m[i] & 1) return 0;
      r *= table(i, m[i] / 2);
    }
    return r;
  }

  GammaExpr moment(const Monomial& m) const { return base_ * moment_ratio(m); }

  /// Blade-wise integral of q e^{-|x|^2} h_kappa^2.
  CliffordGammaValue gaussian_moment(const CPoly& q) const {
    check(q);
    Multivector acc(d_);
    for (const auto& [m, c] : q.terms()) {
      const Rational r = moment_ratio(m);
      if (r != 0) acc += c * r;
    }
    return {acc, base_};
  }

  /// sc[(f, g)_H] / base.
  Rational scalar_pairing_ratio(const CPoly& f, const CPoly& g) const {
    check(f);
    check(g);
    // sc[conj(e_A) e_B] = delta_AB, and only exponent sums with all entries
    // even survive, so g is bucketed by (blade, exponent parity).
    std::map<std::pair<Blade, unsigned>, std::vector<std::pair<Monomial, Rational>>> buckets;
    for (const auto& [m, c] : g.terms())
      for (const auto& [b, v] : c.terms()) buckets[{b, parity(m)}].emplace_back(m, v);
    Rational total = 0;
    for (const auto& [m, c] : f.terms())
      for (const auto& [b, v] : c.terms()) {
        auto it = buckets.find({b, parity(m)});
        if (it == buckets.end()) continue;
        for (const auto& [m2, w] : it->second) total += v * w * moment_ratio(m * m2);
      }
    return total;
  }

  /// sc[(f, g)_H] with (f, g)_H = int conj(f) g e^{-|x|^2} h_kappa^2 dx.
  GammaExpr inner_product(const CPoly& f, const CPoly& g) const { return base_ * scalar_pairing_ratio(f, g); }

  /// The full Clifford-valued (f, g)_H.
  CliffordGammaValue inner_product_full(const CPoly& f, const CPoly& g) const {
    return gaussian_moment(conjugate(f) * g);
  }

  /// sc int_{S^{d-1}} conj(f) g h_kappa^2 dSigma for homogeneous f and g,
  /// recovered from the Gaussian integral via the radial factor
  /// (1/2) Gamma((deg f + deg g + mu)/2).
  GammaExpr spherical_pairing(const CPoly& f, const CPoly& g) const {
    if (!f.is_homogeneous() || !g.is_homogeneous())
      throw std::invalid_argument("spherical pairing needs homogeneous polynomials");
    if (f.is_zero() || g.is_zero()) return {};
    const GammaExpr radial = GammaExpr::rational(frac(1, 2)) * GammaExpr::gamma((f.degree() + g.degree() + mu_) / 2);
    return inner_product(f, g) / radial;
  }

 private:
  static unsigned parity(const Monomial& m) {
    unsigned p = 0;
    for (std::size_t i = 0; i < kHardMaxDimension; ++i) p |= static_cast<unsigned>(m[i] & 1) << i;
    return p;
  }

  // (kappa_i + 1/2)_k, grown on demand.
  const Rational& table(int i, int k) const {
    auto& t = tables_[i];
    if (t.empty()) t.push_back(1);
    while (static_cast<int>(t.size()) <= k) t.push_back(t.back() * (kappa_[i] + frac(1, 2) + Rational(static_cast<long>(t.size()) - 1)));
    return t[k];
  }

  void check(const CPoly& p) const {
    if (p.dimension() != d_) throw dimension_mismatch("integrand dimension mismatch");
  }

  int d_;
  Rational mu_;
  RationalVector kappa_;
  GammaExpr base_;
  mutable std::vector<std::vector<Rational>> tables_;
};

inline CliffordGammaValue gaussian_moment_z2(const ReflectionData& rd, const CPoly& q) {
  return Z2Integrator(rd).gaussian_moment(q);
}

inline GammaExpr inner_product_h(const ReflectionData& rd, const CPoly& f, const CPoly& g) {
  return Z2Integrator(rd).inner_product(f, g);
}

/// (x^s P, x^t P)_H from the spherical norm ||P||_kappa^2:
///   (-1)^{(s+t)/2} (1/2) Gamma((s+t+2n+mu)/2) norm      s, t even
///   (-1)^{(s+t)/2+1} (1/2) Gamma((s+t+2n+mu)/2) norm    s, t odd
///   0                                                   mixed parity
inline GammaExpr radial_pairing_closed_form(int s, int t, int n, const Rational& mu, const GammaExpr& norm) {
  if (s < 0 || t < 0 || n < 0) throw std::invalid_argument("negative degree");
  if ((s - t) % 2 != 0) return {};
  int sign = ((s + t) / 2) % 2 == 0 ? 1 : -1;
  if (s % 2 != 0) sign = -sign;
  return GammaExpr::rational(frac(sign, 2)) * GammaExpr::gamma((s + t + 2 * n + mu) / 2) * norm;
}

struct AdjointSides {
  GammaExpr raised;   // (D_+(p P), q P)_H
  GammaExpr lowered;  // (p P, D_h(q P))_H
  bool equal() const { return raised == lowered; }
};

/// Both sides of (D_+(pP), qP)_H = (pP, D_h(qP))_H for radial coefficient
/// vectors p, q (p = sum_j p_j x^j).
inline AdjointSides adjoint_sides(const DunklOperators& ops, const Z2Integrator& integ, const RationalVector& p,
                                  const RationalVector& q, const CPoly& base) {
  const CPoly pp = radial_reconstruct(p, base);
  const CPoly qp = radial_reconstruct(q, base);
  return {integ.inner_product(ops.d_plus(pp), qp), integ.inner_product(pp, ops.dirac(qp))};
}

inline bool adjoint_check(const ReflectionData& rd, const RationalVector& p, const RationalVector& q,
                          const CPoly& base) {
  return adjoint_sides(DunklOperators(rd), Z2Integrator(rd), p, q, base).equal();
}

}  // namespace dch
