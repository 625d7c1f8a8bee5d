#pragma once

// Dunkl operators T_i, the Dunkl-Dirac operator D_h = sum_i e_i T_i, the
// Dunkl Laplacian, the raising operator D_+ = D_h - 2x, the spherical part
// Gamma_kappa = gamma_kappa + Phi + Psi, and D_h acting on Gaussian-dressed
// polynomials.

#include <map>
#include <mutex>
#include <vector>

#include "dch/clifford.hpp"
#include "dch/errors.hpp"
#include "dch/multipoly.hpp"
#include "dch/reflection.hpp"

namespace dch {

/// poly(x) * exp(-exponent(x)); exponent is |x|^2 unless built otherwise.
struct GaussianDressed {
  SPoly exponent;
  CPoly poly;

  static GaussianDressed standard(const CPoly& p) { return {norm_squared_poly(p.dimension()), p}; }
};

/// Dunkl operator family for one reflection datum.  Divided differences and
/// reflections of individual monomials are memoized; the cache is guarded so
/// a single instance may be shared between threads.
class DunklOperators {
 public:
  explicit DunklOperators(ReflectionData rd) : rd_(std::move(rd)) {
    for (const auto& a : rd_.positive_roots) root_vectors_.push_back(Multivector::vector(a));
    dd_cache_.resize(rd_.positive_roots.size());
    reflect_cache_.resize(rd_.positive_roots.size());
  }

  const ReflectionData& data() const { return rd_; }
  int dimension() const { return rd_.d; }

  /// (f - f o sigma_r) / <alpha_r, x> for the r-th positive root.
  CPoly divided_difference(std::size_t r, const CPoly& f) const {
    check(f);
    CPoly out(rd_.d);
    for (const auto& [m, c] : f.terms()) {
      const SPoly& img = cached(dd_cache_[r], r, m, true);
      for (const auto& [mi, ci] : img.terms()) out.add_term(mi, c * ci);
    }
    return out;
  }

  /// f(sigma_r x).
  CPoly reflect(std::size_t r, const CPoly& f) const {
    check(f);
    CPoly out(rd_.d);
    for (const auto& [m, c] : f.terms()) {
      const SPoly& img = cached(reflect_cache_[r], r, m, false);
      for (const auto& [mi, ci] : img.terms()) out.add_term(mi, c * ci);
    }
    return out;
  }

  /// T_i f for 1 <= i <= d.
  CPoly T(int i, const CPoly& f) const {
    if (i < 1 || i > rd_.d) throw std::invalid_argument("Dunkl operator index out of range");
    CPoly out = f.derivative(static_cast<std::size_t>(i - 1));
    for (std::size_t r = 0; r < rd_.positive_roots.size(); ++r) {
      const Rational w = rd_.kappa[r] * rd_.positive_roots[r][i - 1];
      if (w != 0) out += divided_difference(r, f) * w;
    }
    return out;
  }

  CPoly dirac(const CPoly& f) const {
    check(f);
    CPoly out(rd_.d);
    for (int i = 0; i < rd_.d; ++i) out += left_multiply(Multivector::basis_vector(rd_.d, i + 1), f.derivative(i));
    for (std::size_t r = 0; r < rd_.positive_roots.size(); ++r) {
      if (rd_.kappa[r] == 0) continue;
      out += left_multiply(root_vectors_[r] * rd_.kappa[r], divided_difference(r, f));
    }
    return out;
  }

  /// sum_i T_i^2 f, cross-checked against -D_h^2 f.
  CPoly laplacian(const CPoly& f) const {
    CPoly out(rd_.d);
    for (int i = 1; i <= rd_.d; ++i) out += T(i, T(i, f));
    if (!(out == -dirac(dirac(f)))) throw internal_error("sum T_i^2 differs from -D_h^2");
    return out;
  }

  CPoly d_plus(const CPoly& f) const { return dirac(f) - x_poly(rd_.d) * f * Rational(2); }

  /// Phi f = -sum_{i<j} e_i e_j (x_i d_j - x_j d_i) f.
  CPoly phi(const CPoly& f) const {
    check(f);
    CPoly out(rd_.d);
    for (int i = 0; i < rd_.d; ++i)
      for (int j = i + 1; j < rd_.d; ++j) {
        const CPoly rot = f.derivative(j).shifted(i, 1) - f.derivative(i).shifted(j, 1);
        out -= left_multiply(e_pair(i, j), rot);
      }
    return out;
  }

  /// Psi f = -sum_{i<j} e_i e_j sum_r kappa_r dd_r(f) (x_i a_j - x_j a_i)
  ///         - sum_r kappa_r f(sigma_r x).
  CPoly psi(const CPoly& f) const {
    check(f);
    CPoly out(rd_.d);
    for (std::size_t r = 0; r < rd_.positive_roots.size(); ++r) {
      const Rational& k = rd_.kappa[r];
      if (k == 0) continue;
      const auto& a = rd_.positive_roots[r];
      const CPoly dd = divided_difference(r, f);
      for (int i = 0; i < rd_.d; ++i)
        for (int j = i + 1; j < rd_.d; ++j) {
          SPoly factor(rd_.d);
          factor.add_term(Monomial::unit().shifted(i, 1), a[j]);
          factor.add_term(Monomial::unit().shifted(j, 1), Rational(-a[i]));
          if (factor.is_zero()) continue;
          out -= left_multiply(e_pair(i, j), factor * dd) * k;
        }
      out -= reflect(r, f) * k;
    }
    return out;
  }

  CPoly gamma_sph(const CPoly& f) const { return f * rd_.gamma_kappa + phi(f) + psi(f); }

  /// D_h(poly e^{-q}) = e^{-q} * result.poly, by the product rule.  Requires q
  /// to be invariant under every reflection so that it factors out of the
  /// difference terms.
  GaussianDressed gaussian_dirac(const GaussianDressed& g) const {
    check(g.poly);
    for (const auto& a : rd_.positive_roots)
      if (!(poly_reflect(g.exponent, a) == g.exponent))
        throw unsupported_group("Gaussian exponent is not reflection invariant");
    CPoly out(rd_.d);
    for (int i = 0; i < rd_.d; ++i) {
      const Multivector e = Multivector::basis_vector(rd_.d, i + 1);
      out += left_multiply(e, g.poly.derivative(i));
      out -= left_multiply(e, g.exponent.derivative(i) * g.poly);
    }
    for (std::size_t r = 0; r < rd_.positive_roots.size(); ++r) {
      if (rd_.kappa[r] == 0) continue;
      out += left_multiply(root_vectors_[r] * rd_.kappa[r], divided_difference(r, g.poly));
    }
    return {g.exponent, out};
  }

 private:
  void check(const CPoly& f) const {
    if (f.dimension() != rd_.d) throw dimension_mismatch("polynomial and reflection group dimensions differ");
  }

  Multivector e_pair(int i, int j) const {
    return Multivector::basis_vector(rd_.d, i + 1) * Multivector::basis_vector(rd_.d, j + 1);
  }

  const SPoly& cached(std::map<Monomial, SPoly>& cache, std::size_t r, const Monomial& m, bool divided) const {
    std::lock_guard lock(mutex_);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    const SPoly mono = SPoly::term(rd_.d, m, Rational(1));
    SPoly img = divided ? poly_divided_difference(mono, rd_.positive_roots[r]) : poly_reflect(mono, rd_.positive_roots[r]);
    return cache.emplace(m, std::move(img)).first->second;
  }

  ReflectionData rd_;
  std::vector<Multivector> root_vectors_;
  mutable std::mutex mutex_;
  mutable std::vector<std::map<Monomial, SPoly>> dd_cache_;
  mutable std::vector<std::map<Monomial, SPoly>> reflect_cache_;
};

inline CPoly dunkl_T(const ReflectionData& rd, int i, const CPoly& f) { return DunklOperators(rd).T(i, f); }
inline CPoly dunkl_dirac(const ReflectionData& rd, const CPoly& f) { return DunklOperators(rd).dirac(f); }
inline CPoly dunkl_laplacian(const ReflectionData& rd, const CPoly& f) { return DunklOperators(rd).laplacian(f); }
inline CPoly d_plus(const ReflectionData& rd, const CPoly& f) { return DunklOperators(rd).d_plus(f); }
inline CPoly gamma_sph(const ReflectionData& rd, const CPoly& f) { return DunklOperators(rd).gamma_sph(f); }
inline GaussianDressed gaussian_dirac(const ReflectionData& rd, const GaussianDressed& g) {
  return DunklOperators(rd).gaussian_dirac(g);
}

}  // namespace dch
