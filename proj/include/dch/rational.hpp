#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dch {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.  Decimal points,
/// exponents and embedded whitespace are rejected.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Canonical p/q.
inline Rational frac(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }

/// Greatest integer <= r.
inline mpz_class floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational out = 1;
  for (long i = 0; i < k; ++i) out *= a + i;
  return out;
}

inline Rational factorial(long k) { return pochhammer(1, k); }

inline Rational pow(const Rational& base, long e) {
  Rational out = 1;
  const bool inv = e < 0;
  for (long i = 0; i < (inv ? -e : e); ++i) out *= base;
  if (inv) {
    if (out == 0) throw std::domain_error("pow: zero to a negative power");
    out = 1 / out;
  }
  return out;
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

using RationalVector = std::vector<Rational>;

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const RationalVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

/// Comma separated rationals, e.g. "1/2,1/3".
inline RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace dch
