#pragma once

// Exact arithmetic in the real Clifford algebra R_{0,d}: generators e_1..e_d
// with e_i e_j + e_j e_i = -2 delta_ij.  A blade e_A is stored as the bitmask
// of A (bit i-1 <-> e_i), indices ascending.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "dch/errors.hpp"
#include "dch/rational.hpp"

namespace dch {

using Blade = std::uint32_t;

inline constexpr int kHardMaxDimension = 16;

namespace detail {
inline std::atomic<int>& max_dimension_setting() {
  static std::atomic<int> value{8};
  return value;
}
}  // namespace detail

/// Largest dimension accepted by Multivector (default 8).
inline int max_dimension() { return detail::max_dimension_setting().load(); }

/// Raises the dimension cap; values above kHardMaxDimension are rejected.
inline void set_max_dimension(int d) {
  if (d < 1 || d > kHardMaxDimension)
    throw std::invalid_argument("max dimension must lie in [1, 16]");
  detail::max_dimension_setting().store(d);
}

inline int grade(Blade b) { return std::popcount(b); }

/// Sign s with e_A e_B = s e_{A xor B}: one -1 per transposition needed to
/// merge the index lists plus one -1 per repeated generator (e_i^2 = -1).
inline int blade_product_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

/// Sign of the Clifford conjugate on a grade-k blade: (-1)^{k(k+1)/2}.
inline int conjugation_sign(Blade b) {
  const int k = grade(b);
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

class Multivector {
 public:
  using Term = std::pair<Blade, Rational>;

  explicit Multivector(int d) : d_(d) {
    if (d < 1 || d > max_dimension())
      throw std::invalid_argument("Clifford dimension " + std::to_string(d) +
                                  " outside [1, " + std::to_string(max_dimension()) + "]");
  }

  static Multivector scalar(int d, const Rational& c) { return blade(d, 0, c); }

  static Multivector blade(int d, Blade mask, const Rational& c = 1) {
    Multivector m(d);
    if (mask >> d) throw std::invalid_argument("blade index exceeds dimension");
    if (c != 0) m.terms_.emplace_back(mask, c);
    return m;
  }

  /// c e_i with 1-based i.
  static Multivector basis_vector(int d, int i, const Rational& c = 1) {
    if (i < 1 || i > d) throw std::invalid_argument("generator index out of range");
    return blade(d, Blade{1} << (i - 1), c);
  }

  static Multivector vector(const RationalVector& x) {
    Multivector m(static_cast<int>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) m.terms_.emplace_back(Blade{1} << i, x[i]);
    return m;
  }

  int dimension() const { return d_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Blade b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, Blade key) { return t.first < key; });
    return (it != terms_.end() && it->first == b) ? it->second : Rational(0);
  }

  Rational scalar_part() const { return coefficient(0); }

  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  bool is_vector() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return grade(t.first) == 1; });
  }

  RationalVector vector_part() const {
    RationalVector x(d_);
    for (const auto& [b, c] : terms_)
      if (grade(b) == 1) x[std::countr_zero(b)] = c;
    return x;
  }

  Multivector& operator+=(const Multivector& o) { return *this = combine(*this, o, 1); }
  Multivector& operator-=(const Multivector& o) { return *this = combine(*this, o, -1); }

  Multivector& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) { return combine(a, b, 1); }
  friend Multivector operator-(const Multivector& a, const Multivector& b) { return combine(a, b, -1); }
  friend Multivector operator-(Multivector a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend Multivector operator*(Multivector a, const Rational& c) { return a *= c; }
  friend Multivector operator*(const Rational& c, Multivector a) { return a *= c; }
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  /// Builds from unsorted (blade, coeff) pairs, summing duplicates.
  static Multivector from_terms(int d, std::vector<Term> terms) {
    Multivector m(d);
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    for (auto& t : terms) {
      if (t.first >> d) throw std::invalid_argument("blade index exceeds dimension");
      if (!m.terms_.empty() && m.terms_.back().first == t.first)
        m.terms_.back().second += t.second;
      else
        m.terms_.push_back(std::move(t));
    }
    std::erase_if(m.terms_, [](const Term& t) { return t.second == 0; });
    return m;
  }

 private:
  static Multivector combine(const Multivector& a, const Multivector& b, int sgn_b) {
    if (a.d_ != b.d_) throw dimension_mismatch("multivector dimensions differ");
    Multivector out(a.d_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        out.terms_.emplace_back(j->first, sgn_b > 0 ? j->second : Rational(-j->second));
        ++j;
      } else {
        Rational c = sgn_b > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
        if (c != 0) out.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  int d_;
  std::vector<Term> terms_;  // sorted by blade, no zero coefficients
};

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  if (a.d_ != b.d_) throw dimension_mismatch("multivector dimensions differ");
  Multivector out(a.d_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto& [ba, ca] = a.terms_[0];
    const auto& [bb, cb] = b.terms_[0];
    out.terms_.emplace_back(ba ^ bb, blade_product_sign(ba, bb) > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    return out;
  }
  std::vector<Rational> acc(std::size_t{1} << a.d_);
  std::vector<char> used(acc.size(), 0);
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) {
      const Blade r = ba ^ bb;
      if (blade_product_sign(ba, bb) > 0)
        acc[r] += ca * cb;
      else
        acc[r] -= ca * cb;
      used[r] = 1;
    }
  }
  for (Blade r = 0; r < acc.size(); ++r)
    if (used[r] && acc[r] != 0) out.terms_.emplace_back(r, std::move(acc[r]));
  return out;
}

inline Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

inline Multivector conjugate(const Multivector& a) {
  std::vector<Multivector::Term> t = a.terms();
  for (auto& [b, c] : t)
    if (conjugation_sign(b) < 0) c = -c;
  return Multivector::from_terms(a.dimension(), std::move(t));
}

/// x^{-1} = -x / |x|^2 for a nonzero pure vector.
inline Multivector vector_inverse(const Multivector& x) {
  if (!x.is_vector()) throw std::invalid_argument("vector_inverse: input has non-vector components");
  if (x.is_zero()) throw std::domain_error("vector_inverse: zero vector");
  const RationalVector v = x.vector_part();
  return x * Rational(-1 / dot(v, v));
}

/// Reflection in the hyperplane orthogonal to alpha: x - 2<x,a>/|a|^2 a.
inline RationalVector reflect_vector(const RationalVector& x, const RationalVector& alpha) {
  if (x.size() != alpha.size()) throw dimension_mismatch("reflect_vector: dimension mismatch");
  const Rational norm2 = dot(alpha, alpha);
  if (norm2 == 0) throw std::domain_error("reflect_vector: zero root");
  const Rational scale = 2 * dot(x, alpha) / norm2;
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - scale * alpha[i];
  return out;
}

/// The same reflection computed as -alpha x alpha^{-1} in the algebra.
inline RationalVector reflect_vector_clifford(const RationalVector& x, const RationalVector& alpha) {
  if (x.size() != alpha.size()) throw dimension_mismatch("reflect_vector: dimension mismatch");
  const Multivector a = Multivector::vector(alpha);
  const Multivector r = -(a * Multivector::vector(x) * vector_inverse(a));
  if (!r.is_vector()) throw internal_error("reflection left the vector subspace");
  return r.vector_part();
}

}  // namespace dch
