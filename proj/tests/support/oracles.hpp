#pragma once

// Independent reference computations used as test oracles.  Each one takes a
// different route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "dch/clifford.hpp"
#include "dch/multipoly.hpp"
#include "dch/reflection.hpp"

namespace oracle {

using dch::CPoly;
using dch::Multivector;
using dch::Rational;
using dch::RationalVector;
using dch::SPoly;

/// e_A e_B by writing out the generator word, bubble-sorting it (each swap of
/// distinct generators costs a sign) and cancelling e_i e_i = -1.
inline std::pair<int, dch::Blade> blade_product(dch::Blade a, dch::Blade b) {
  std::vector<int> word;
  for (int i = 0; i < 32; ++i)
    if (a & (1u << i)) word.push_back(i);
  for (int i = 0; i < 32; ++i)
    if (b & (1u << i)) word.push_back(i);
  int sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass)
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
      }
  dch::Blade out = 0;
  for (std::size_t k = 0; k < word.size();) {
    if (k + 1 < word.size() && word[k] == word[k + 1]) {
      sign = -sign;
      k += 2;
    } else {
      out |= 1u << word[k];
      ++k;
    }
  }
  return {sign, out};
}

inline Multivector product(const Multivector& a, const Multivector& b) {
  Multivector out(a.dimension());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      const auto [s, blade] = blade_product(ba, bb);
      out += Multivector::blade(a.dimension(), blade, ca * cb * s);
    }
  return out;
}

inline Rational eval(const SPoly& p, const RationalVector& x) {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < p.dimension(); ++i) t *= dch::pow(x[i], m[i]);
    s += t;
  }
  return s;
}

inline Multivector eval(const CPoly& p, const RationalVector& x) {
  Multivector s(p.dimension());
  for (const auto& [m, c] : p.terms()) {
    Rational t = 1;
    for (int i = 0; i < p.dimension(); ++i) t *= dch::pow(x[i], m[i]);
    s += c * t;
  }
  return s;
}

/// d/dt f(x + t e_i) at t = 0 by exact Lagrange interpolation through
/// t = 0..deg; no symbolic differentiation involved.
inline Multivector partial_at(const CPoly& f, int i, const RationalVector& x) {
  const int m = std::max(1, f.degree());
  std::vector<Multivector> vals;
  for (int k = 0; k <= m; ++k) {
    RationalVector y = x;
    y[i] += k;
    vals.push_back(eval(f, y));
  }
  // L_k'(0) for nodes 0..m.
  Multivector out(f.dimension());
  for (int k = 0; k <= m; ++k) {
    Rational deriv = 0;
    for (int j = 0; j <= m; ++j) {
      if (j == k) continue;
      Rational term = Rational(1) / (k - j);
      for (int l = 0; l <= m; ++l)
        if (l != k && l != j) term *= Rational(-l) / (k - l);
      deriv += term;
    }
    out += vals[k] * deriv;
  }
  return out;
}

inline RationalVector reflect_point(const RationalVector& x, const RationalVector& a) {
  const Rational s = 2 * dch::dot(x, a) / dch::dot(a, a);
  RationalVector y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= s * a[i];
  return y;
}

/// T_i f at a point off every mirror, straight from the definition.
inline Multivector dunkl_T_at(const dch::ReflectionData& rd, int i, const CPoly& f, const RationalVector& x) {
  Multivector out = partial_at(f, i - 1, x);
  const Multivector fx = eval(f, x);
  for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) {
    const auto& a = rd.positive_roots[r];
    out += (fx - eval(f, reflect_point(x, a))) * (rd.kappa[r] * a[i - 1] / dch::dot(a, x));
  }
  return out;
}

inline Multivector dirac_at(const dch::ReflectionData& rd, const CPoly& f, const RationalVector& x) {
  Multivector out(rd.d);
  for (int i = 1; i <= rd.d; ++i) out += product(Multivector::basis_vector(rd.d, i), dunkl_T_at(rd, i, f, x));
  return out;
}

/// Classical Dirac operator sum_i e_i d_i (no reflections).
inline CPoly classical_dirac(const CPoly& f) {
  CPoly out(f.dimension());
  for (int i = 0; i < f.dimension(); ++i) out += dch::left_multiply(Multivector::basis_vector(f.dimension(), i + 1), f.derivative(i));
  return out;
}

/// L_s^alpha coefficients by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1+alpha-t) L_k - (k+alpha) L_{k-1}.
inline RationalVector laguerre_by_recurrence(int s, const Rational& alpha) {
  RationalVector prev = {1};
  if (s == 0) return prev;
  RationalVector cur = {alpha + 1, -1};
  for (int k = 1; k < s; ++k) {
    RationalVector next(k + 2);
    for (int j = 0; j <= k; ++j) {
      next[j] += (2 * k + 1 + alpha) * cur[j];
      next[j + 1] -= cur[j];
    }
    for (int j = 0; j < k; ++j) next[j] -= (k + alpha) * prev[j];
    for (auto& c : next) c /= k + 1;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// int_R |t|^p e^{-t^2} dt by composite Simpson on [0, 12] after t = u^2
/// (dt = 2u du), which removes the |t|^{2 kappa} kink at the origin.
inline double moment_1d(double p) {
  const int n = 200000;
  const double hi = std::sqrt(12.0), h = hi / n;
  auto f = [&](double u) { return u == 0.0 ? 0.0 : 2 * u * std::pow(u * u, p) * std::exp(-u * u * u * u); };
  double s = f(0) + f(hi);
  for (int k = 1; k < n; ++k) s += f(k * h) * (k % 2 ? 4 : 2);
  return 2 * s * h / 3;
}

/// Recurrence coefficient beta_k of the monic orthogonal polynomials for
/// |t|^{2 kappa} e^{-t^2} with unit mass (generalized Hermite).
inline Rational generalized_hermite_beta(int k, const Rational& kappa) {
  if (k == 0) return 1;
  return dch::frac(k, 2) + (k % 2 == 1 ? kappa : Rational(0));
}

}  // namespace oracle
