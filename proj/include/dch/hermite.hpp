#pragma once

// Dunkl-Clifford-Hermite polynomials H_s = (D_+)^s P_n for a monogenic P_n,
// their radial coefficients H_s = sum_j a_j^s x^j P_n, the eigenvalue
// constant C(s, mu, n), and the generalized Laguerre form of the radial part.

#include <string>
#include <vector>

#include "dch/dunkl.hpp"
#include "dch/errors.hpp"
#include "dch/multipoly.hpp"
#include "dch/reflection.hpp"

namespace dch {

struct HermiteFamily {
  ReflectionData rd;
  CPoly p{1};
  int n = 0;
  Rational mu;
  int max_s = 0;
  std::vector<CPoly> polys;
  std::vector<RationalVector> radial;  // radial[s][j] = a_j^s

  Rational a(int s, int j) const {
    if (j < 0 || s < 0 || s > max_s) return 0;
    const auto& r = radial[static_cast<std::size_t>(s)];
    return static_cast<std::size_t>(j) < r.size() ? r[static_cast<std::size_t>(j)] : Rational(0);
  }
};

/// C(s, mu, n) = 2s for even s, 2(s + mu + 2n - 1) for odd s; s >= 1.
inline Rational c_coefficient(int s, const Rational& mu, int n) {
  if (s < 1) throw std::invalid_argument("C(s, mu, n) needs s >= 1");
  if (s % 2 == 0) return 2 * s;
  return 2 * (s + mu + 2 * n - 1);
}

/// C(s, mu, n) extended by 0 at s = 0.
inline Rational lowering_constant(int s, const Rational& mu, int n) { return s == 0 ? Rational(0) : c_coefficient(s, mu, n); }

inline HermiteFamily hermite_generate(const DunklOperators& ops, const CPoly& p, int max_s) {
  if (max_s < 0) throw std::invalid_argument("max_s must be nonnegative");
  if (p.is_zero() || !p.is_homogeneous()) throw std::invalid_argument("P_n must be a nonzero homogeneous polynomial");
  if (!ops.dirac(p).is_zero()) throw std::invalid_argument("P_n is not Dunkl-monogenic");
  HermiteFamily f;
  f.rd = ops.data();
  f.p = p;
  f.n = p.degree();
  f.mu = f.rd.mu;
  f.max_s = max_s;
  f.polys.push_back(p);
  for (int s = 1; s <= max_s; ++s) f.polys.push_back(ops.d_plus(f.polys.back()));
  for (const auto& h : f.polys) f.radial.push_back(radial_decompose(h, p));
  return f;
}

inline HermiteFamily hermite_generate(const ReflectionData& rd, const CPoly& p, int max_s) {
  return hermite_generate(DunklOperators(rd), p, max_s);
}

/// -2x H_s + C(s) H_{s-1}; h_prev is ignored at s = 0.
inline CPoly three_term_next(const CPoly& h_s, const CPoly& h_prev, int s, const Rational& mu, int n) {
  const int d = h_s.dimension();
  CPoly next = x_poly(d) * h_s * Rational(-2);
  if (s >= 1) {
    if (h_prev.dimension() != d) throw dimension_mismatch("three-term recurrence inputs differ in dimension");
    next += h_prev * c_coefficient(s, mu, n);
  }
  return next;
}

/// D_h^2 H - 2x D_h H - C(s) H.
inline CPoly differential_equation_residual(const DunklOperators& ops, const CPoly& h, int s, const Rational& mu,
                                            int n) {
  const CPoly dh = ops.dirac(h);
  return ops.dirac(dh) - x_poly(h.dimension()) * dh * Rational(2) - h * lowering_constant(s, mu, n);
}

/// Coefficients of L_s^alpha(t) in the monomial basis, lowest degree first:
/// (-1)^j prod_{k=j}^{s-1} (alpha + 1 + k) / (j! (s-j)!).
inline RationalVector laguerre_poly(int s, const Rational& alpha) {
  if (s < 0) throw std::invalid_argument("Laguerre degree must be nonnegative");
  if (alpha <= -1 && is_integer(alpha)) throw std::domain_error("Laguerre parameter hits a Gamma pole");
  RationalVector c(static_cast<std::size_t>(s) + 1);
  for (int j = 0; j <= s; ++j) {
    Rational v = 1;
    for (int k = j; k < s; ++k) v *= alpha + 1 + k;
    v /= factorial(j) * factorial(s - j);
    c[static_cast<std::size_t>(j)] = j % 2 == 0 ? v : Rational(-v);
  }
  return c;
}

/// 2^s (s/2)! L_{s/2}^{mu/2+n-1}(|x|^2) P_n for even s and
/// -2^s ((s-1)/2)! x L_{(s-1)/2}^{mu/2+n}(|x|^2) P_n for odd s.
inline CPoly laguerre_form(int s, const Rational& mu, int n, const CPoly& p) {
  const int d = p.dimension();
  const int m = s / 2;
  const Rational alpha = mu / 2 + n - (s % 2 == 0 ? 1 : 0);
  const RationalVector c = laguerre_poly(m, alpha);
  const SPoly r2 = norm_squared_poly(d);
  SPoly l(d), power = SPoly::constant(d, 1);
  for (int j = 0; j <= m; ++j) {
    l += power * c[static_cast<std::size_t>(j)];
    power = power * r2;
  }
  const Rational scale = pow(Rational(2), s) * factorial(m);
  if (s % 2 == 0) return l * scale * p;
  return (l * Rational(-scale)) * (x_poly(d) * p);
}

inline bool laguerre_oracle_compare(const HermiteFamily& f, int s) {
  if (s < 0 || s > f.max_s) throw std::out_of_range("s outside the generated family");
  return laguerre_form(s, f.mu, f.n, f.p) == f.polys[static_cast<std::size_t>(s)];
}

struct RecurrenceReport {
  bool parity = true;
  bool two_step = true;
  bool ladder = true;
  bool seeds = true;
  bool closed_chain = true;
  std::vector<std::string> failures;

  bool ok() const { return parity && two_step && ladder && seeds && closed_chain; }
};

/// Checks the radial coefficients against the two-step recurrences, the
/// within-degree ladder, the closed seeds a_0^{2t}, a_1^{2t+1}, and the
/// resulting closed form of every coefficient.  Out-of-range a's are zero.
inline RecurrenceReport coeff_recurrence_check(const HermiteFamily& f) {
  RecurrenceReport rep;
  const Rational& mu = f.mu;
  const int n = f.n;
  auto fail = [&](bool& flag, const std::string& what, int s, int j) {
    flag = false;
    rep.failures.push_back(what + " s=" + std::to_string(s) + " j=" + std::to_string(j));
  };
  for (int s = 0; s <= f.max_s; ++s) {
    for (int j = 0; j <= s; ++j)
      if ((j - s) % 2 != 0 && f.a(s, j) != 0) fail(rep.parity, "parity", s, j);
    if (static_cast<int>(f.radial[static_cast<std::size_t>(s)].size()) > s + 1) fail(rep.parity, "degree", s, s + 1);
  }
  const Rational b = mu / 2 + n;
  for (int s = 0; s <= f.max_s; ++s) {
    const int t = s / 2;
    if (s % 2 == 0) {
      for (int j = 0; j <= t && s >= 2; ++j) {
        const Rational rhs = 2 * (j + 1) * (2 * j + mu + 2 * n) * f.a(s - 2, 2 * j + 2) +
                             2 * (4 * j + mu + 2 * n) * f.a(s - 2, 2 * j) + 4 * f.a(s - 2, 2 * j - 2);
        if (f.a(s, 2 * j) != rhs) fail(rep.two_step, "two-step even", s, 2 * j);
      }
      for (int j = 1; j <= t; ++j)
        if (2 * j * (2 * j + mu + 2 * n - 2) * f.a(s, 2 * j) != 4 * (t - j + 1) * f.a(s, 2 * j - 2))
          fail(rep.ladder, "ladder even", s, 2 * j);
      const Rational seed = pow(Rational(4), t) * pochhammer(b, t);
      if (f.a(s, 0) != seed) fail(rep.seeds, "seed even", s, 0);
      for (int j = 0; j <= t; ++j)
        if (f.a(s, 2 * j) != binomial(t, j) / pochhammer(b, j) * seed) fail(rep.closed_chain, "closed even", s, 2 * j);
    } else {
      for (int j = 0; j <= t && s >= 3; ++j) {
        const Rational rhs = 2 * (j + 1) * (2 * j + mu + 2 * n + 2) * f.a(s - 2, 2 * j + 3) +
                             2 * (4 * j + mu + 2 * n + 2) * f.a(s - 2, 2 * j + 1) + 4 * f.a(s - 2, 2 * j - 1);
        if (f.a(s, 2 * j + 1) != rhs) fail(rep.two_step, "two-step odd", s, 2 * j + 1);
      }
      for (int j = 1; j <= t; ++j)
        if (2 * j * (2 * j + mu + 2 * n) * f.a(s, 2 * j + 1) != 4 * (t - j + 1) * f.a(s, 2 * j - 1))
          fail(rep.ladder, "ladder odd", s, 2 * j + 1);
      const Rational seed = -2 * pow(Rational(4), t) * pochhammer(b + 1, t);
      if (f.a(s, 1) != seed) fail(rep.seeds, "seed odd", s, 1);
      for (int j = 0; j <= t; ++j)
        if (f.a(s, 2 * j + 1) != binomial(t, j) / pochhammer(b + 1, j) * seed)
          fail(rep.closed_chain, "closed odd", s, 2 * j + 1);
    }
  }
  return rep;
}

}  // namespace dch
