#pragma once

// Sparse polynomials in commuting real variables x_1..x_d with coefficients in
// Q (SPoly) or in the Clifford algebra (CPoly).  Clifford coefficients sit to
// the left of the monomial; products keep the left operand's coefficient on
// the left.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dch/clifford.hpp"
#include "dch/errors.hpp"
#include "dch/linalg.hpp"
#include "dch/rational.hpp"

namespace dch {

struct Monomial {
  std::array<std::uint8_t, kHardMaxDimension> exps{};

  static Monomial unit() { return {}; }

  static Monomial from(std::span<const int> e) {
    if (e.size() > kHardMaxDimension) throw std::invalid_argument("too many exponents");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("exponent out of range [0,255]");
      m.exps[i] = static_cast<std::uint8_t>(e[i]);
    }
    return m;
  }

  int operator[](std::size_t i) const { return exps[i]; }

  int degree() const {
    int s = 0;
    for (auto e : exps) s += e;
    return s;
  }

  Monomial shifted(std::size_t i, int delta) const {
    Monomial m = *this;
    const int v = m.exps[i] + delta;
    if (v < 0 || v > 255) throw std::overflow_error("monomial exponent out of range");
    m.exps[i] = static_cast<std::uint8_t>(v);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kHardMaxDimension; ++i) {
      const int v = a.exps[i] + b.exps[i];
      if (v > 255) throw std::overflow_error("monomial exponent out of range");
      m.exps[i] = static_cast<std::uint8_t>(v);
    }
    return m;
  }

  auto operator<=>(const Monomial&) const = default;
};

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static Rational zero(int) { return 0; }
  static bool is_zero(const Rational& c) { return c == 0; }
};

template <>
struct coeff_traits<Multivector> {
  static Multivector zero(int d) { return Multivector(d); }
  static bool is_zero(const Multivector& c) { return c.is_zero(); }
};

template <class C>
class Polynomial {
 public:
  using Traits = coeff_traits<C>;
  using TermMap = std::map<Monomial, C>;

  explicit Polynomial(int d) : d_(d) {
    if (d < 1 || d > kHardMaxDimension) throw std::invalid_argument("polynomial dimension out of range");
  }

  static Polynomial constant(int d, const C& c) { return term(d, Monomial::unit(), c); }

  static Polynomial term(int d, const Monomial& m, const C& c) {
    Polynomial p(d);
    p.add_term(m, c);
    return p;
  }

  int dimension() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Traits::zero(d_) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
    return deg;
  }

  int degree_in(std::size_t i) const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m[i]);
    return deg;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int k = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first.degree() == k; });
  }

  Polynomial homogeneous_part(int k) const {
    Polynomial p(d_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == k) p.terms_.emplace(m, c);
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_dim(b);
    Polynomial out(a.d_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  /// Partial derivative in x_i (0-based).
  Polynomial derivative(std::size_t i) const {
    Polynomial out(d_);
    for (const auto& [m, c] : terms_)
      if (m[i] > 0) out.add_term(m.shifted(i, -1), c * Rational(m[i]));
    return out;
  }

  /// Multiplies by x_i^k (0-based i).
  Polynomial shifted(std::size_t i, int k) const {
    Polynomial out(d_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.shifted(i, k), c);
    return out;
  }

  /// Applies f(x) -> f(y) coefficient-wise to the coefficients.
  template <class F>
  Polynomial map_coefficients(F&& f) const {
    Polynomial out(d_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  void check_dim(const Polynomial& o) const {
    if (d_ != o.d_) throw dimension_mismatch("polynomial dimensions differ");
  }

 private:
  int d_;
  TermMap terms_;
};

using SPoly = Polynomial<Rational>;
using CPoly = Polynomial<Multivector>;

inline SPoly variable(int d, std::size_t i) {
  return SPoly::term(d, Monomial::unit().shifted(i, 1), Rational(1));
}

/// <alpha, x> as a scalar polynomial.
inline SPoly linear_form(const RationalVector& alpha) {
  const int d = static_cast<int>(alpha.size());
  SPoly p(d);
  for (std::size_t i = 0; i < alpha.size(); ++i) p.add_term(Monomial::unit().shifted(i, 1), alpha[i]);
  return p;
}

/// |x|^2 = x_1^2 + ... + x_d^2.
inline SPoly norm_squared_poly(int d) {
  SPoly p(d);
  for (int i = 0; i < d; ++i) p.add_term(Monomial::unit().shifted(i, 2), Rational(1));
  return p;
}

/// The vector variable x = sum_i x_i e_i.
inline CPoly x_poly(int d) {
  CPoly p(d);
  for (int i = 0; i < d; ++i) p.add_term(Monomial::unit().shifted(i, 1), Multivector::basis_vector(d, i + 1));
  return p;
}

inline CPoly lift(const SPoly& p) {
  CPoly out(p.dimension());
  for (const auto& [m, c] : p.terms()) out.add_term(m, Multivector::scalar(p.dimension(), c));
  return out;
}

/// Scalar-polynomial times Clifford-polynomial.
inline CPoly operator*(const SPoly& s, const CPoly& p) {
  s.check_dim(SPoly(p.dimension()));
  CPoly out(p.dimension());
  for (const auto& [ms, cs] : s.terms())
    for (const auto& [mp, cp] : p.terms()) out.add_term(ms * mp, cp * cs);
  return out;
}

inline CPoly operator*(const CPoly& p, const SPoly& s) { return s * p; }

/// a * p with the constant multivector a on the left of every coefficient.
inline CPoly left_multiply(const Multivector& a, const CPoly& p) {
  CPoly out(p.dimension());
  for (const auto& [m, c] : p.terms()) out.add_term(m, a * c);
  return out;
}

inline CPoly right_multiply(const CPoly& p, const Multivector& a) {
  CPoly out(p.dimension());
  for (const auto& [m, c] : p.terms()) out.add_term(m, c * a);
  return out;
}

inline CPoly conjugate(const CPoly& p) {
  return p.map_coefficients([](const Multivector& c) { return conjugate(c); });
}

inline CPoly poly_mul(const CPoly& p, const CPoly& q) { return p * q; }

/// Geometric power x^j of the vector variable.
inline CPoly x_power(int d, int j) {
  CPoly out = CPoly::constant(d, Multivector::scalar(d, 1));
  const CPoly x = x_poly(d);
  for (int k = 0; k < j; ++k) out = x * out;
  return out;
}

/// Square rational matrix stored row-major.
using LinearMap = std::vector<RationalVector>;

/// Substitutes x_i -> sum_j map[i][j] x_j in every monomial.
template <class C>
Polynomial<C> substitute_linear(const Polynomial<C>& p, const LinearMap& map) {
  const int d = p.dimension();
  if (map.size() != static_cast<std::size_t>(d)) throw dimension_mismatch("substitution size mismatch");
  std::vector<std::vector<SPoly>> powers(d);
  for (int i = 0; i < d; ++i) powers[i].push_back(SPoly::constant(d, Rational(1)));
  auto power = [&](int i, int k) -> const SPoly& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * linear_form(map[i]));
    return powers[i][k];
  };
  Polynomial<C> out(d);
  for (const auto& [m, c] : p.terms()) {
    SPoly image = SPoly::constant(d, Rational(1));
    for (int i = 0; i < d; ++i)
      if (m[i] > 0) image = image * power(i, m[i]);
    for (const auto& [mi, ci] : image.terms()) out.add_term(mi, c * ci);
  }
  return out;
}

/// Matrix of the reflection x -> x - 2<x,a>/|a|^2 a.
inline LinearMap reflection_matrix(const RationalVector& alpha) {
  const Rational n2 = dot(alpha, alpha);
  if (n2 == 0) throw std::domain_error("reflection in a zero root");
  const std::size_t d = alpha.size();
  LinearMap s(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s[i][j] = (i == j ? Rational(1) : Rational(0)) - 2 * alpha[i] * alpha[j] / n2;
  return s;
}

namespace detail {

// Signed permutation x_i -> sign[i] * x_perm[i], or nullopt.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;
};

inline std::optional<SignedPermutation> as_signed_permutation(const LinearMap& s) {
  SignedPermutation out;
  for (const auto& row : s) {
    int col = -1;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      if (col >= 0 || (row[j] != 1 && row[j] != -1)) return std::nullopt;
      col = static_cast<int>(j);
    }
    if (col < 0) return std::nullopt;
    out.perm.push_back(col);
    out.sign.push_back(row[col] > 0 ? 1 : -1);
  }
  return out;
}

}  // namespace detail

/// f(sigma_alpha x).
template <class C>
Polynomial<C> poly_reflect(const Polynomial<C>& p, const RationalVector& alpha) {
  if (alpha.size() != static_cast<std::size_t>(p.dimension())) throw dimension_mismatch("root dimension mismatch");
  if (is_zero(alpha)) throw std::domain_error("reflection in a zero root");
  const LinearMap s = reflection_matrix(alpha);
  if (auto sp = detail::as_signed_permutation(s)) {
    Polynomial<C> out(p.dimension());
    for (const auto& [m, c] : p.terms()) {
      Monomial image;
      int sgn = 1;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        image.exps[sp->perm[i]] = static_cast<std::uint8_t>(image.exps[sp->perm[i]] + m.exps[i]);
        if (sp->sign[i] < 0 && (m.exps[i] & 1)) sgn = -sgn;
      }
      out.add_term(image, sgn > 0 ? c : C(-c));
    }
    return out;
  }
  return substitute_linear(p, s);
}

/// (f(x) - f(sigma_alpha x)) / <alpha, x>, computed by exact division.
///
/// The linear form is made a coordinate by the substitution
/// x_k = (y_k - sum_{j != k} alpha_j y_j) / alpha_k (k = first nonzero entry),
/// the numerator is divided by y_k termwise and the substitution is undone.
template <class C>
Polynomial<C> poly_divided_difference(const Polynomial<C>& p, const RationalVector& alpha) {
  const int d = p.dimension();
  const Polynomial<C> numer = p - poly_reflect(p, alpha);
  Polynomial<C> out(d);
  if (numer.is_zero()) return out;

  std::size_t k = 0;
  while (alpha[k] == 0) ++k;
  const bool axis = std::count_if(alpha.begin(), alpha.end(), [](const Rational& a) { return a != 0; }) == 1;

  auto divide_by_coordinate = [&](const Polynomial<C>& q, const Rational& scale) {
    Polynomial<C> r(d);
    for (const auto& [m, c] : q.terms()) {
      if (m[k] == 0) throw internal_error("divided difference left a remainder");
      r.add_term(m.shifted(k, -1), c * Rational(1 / scale));
    }
    return r;
  };

  if (axis) return divide_by_coordinate(numer, alpha[k]);

  LinearMap forward(d, RationalVector(d));
  LinearMap backward(d, RationalVector(d));
  for (int i = 0; i < d; ++i) {
    forward[i][i] = 1;
    backward[i][i] = 1;
  }
  forward[k] = RationalVector(d);
  for (int j = 0; j < d; ++j) forward[k][j] = (static_cast<std::size_t>(j) == k ? Rational(1) : Rational(-alpha[j])) / alpha[k];
  backward[k] = alpha;
  return substitute_linear(divide_by_coordinate(substitute_linear(numer, forward), 1), backward);
}

/// Coefficients (a_0..a_m) with p = sum_j a_j x^j P exactly, where x^j is the
/// j-th geometric power of the vector variable.
inline RationalVector radial_decompose(const CPoly& p, const CPoly& base) {
  if (base.is_zero()) throw std::invalid_argument("radial_decompose: zero base polynomial");
  p.check_dim(base);
  if (p.is_zero()) return {};
  const int d = p.dimension();
  const int m = p.degree() - base.degree();
  if (m < 0) throw decomposition_error("polynomial degree below the base degree");

  std::vector<CPoly> columns;
  CPoly cur = base;
  const CPoly x = x_poly(d);
  for (int j = 0; j <= m; ++j) {
    columns.push_back(cur);
    cur = x * cur;
  }
  std::map<std::pair<Monomial, Blade>, std::size_t> row_of;
  auto index = [&](const Monomial& mono, Blade b) {
    return row_of.try_emplace({mono, b}, row_of.size()).first->second;
  };
  for (const auto& col : columns)
    for (const auto& [mono, c] : col.terms())
      for (const auto& [b, v] : c.terms()) index(mono, b);
  for (const auto& [mono, c] : p.terms())
    for (const auto& [b, v] : c.terms()) index(mono, b);

  RationalMatrix a(row_of.size(), columns.size());
  RationalVector rhs(row_of.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [mono, c] : columns[j].terms())
      for (const auto& [b, v] : c.terms()) a(row_of.at({mono, b}), j) = v;
  for (const auto& [mono, c] : p.terms())
    for (const auto& [b, v] : c.terms()) rhs[row_of.at({mono, b})] = v;

  auto sol = solve(a, rhs);
  if (!sol) throw decomposition_error("polynomial is not of the form sum_j a_j x^j P");

  CPoly rebuilt(d);
  for (std::size_t j = 0; j < columns.size(); ++j) rebuilt += columns[j] * (*sol)[j];
  if (!(rebuilt == p)) throw internal_error("radial reconstruction mismatch");
  while (!sol->empty() && sol->back() == 0) sol->pop_back();
  return *sol;
}

/// sum_j a_j x^j P.
inline CPoly radial_reconstruct(const RationalVector& a, const CPoly& base) {
  CPoly out(base.dimension());
  CPoly cur = base;
  const CPoly x = x_poly(base.dimension());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != 0) out += cur * a[j];
    if (j + 1 < a.size()) cur = x * cur;
  }
  return out;
}

/// All exponent vectors of total degree n in d variables, in lexicographically
/// decreasing order (x_1^n first).
inline std::vector<Monomial> monomials_of_degree(int d, int n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  std::vector<int> e(d, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == d - 1) {
      e[i] = left;
      out.push_back(Monomial::from(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace dch
