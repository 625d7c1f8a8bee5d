#pragma once

// Exact values of the form  sum_k c_k * pi^{p_k/2} * prod_a Gamma(a)^{e_ak}
// with rational c_k, integer p_k and e_ak, and every Gamma argument reduced to
// a in (0,1) by Gamma(z+1) = z Gamma(z).  Gamma(1) = 1 and Gamma(1/2) = pi^{1/2}
// are folded in, so the normal form is unique for a given set of symbols.
//
// Equality of normal forms is syntactic: algebraic relations between Gamma
// values at different arguments (reflection or multiplication formulas) are
// not applied.

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dch/rational.hpp"

namespace dch {

class GammaExpr {
 public:
  struct Key {
    int pi_half_power = 0;
    std::vector<std::pair<Rational, int>> gammas;  // sorted by argument, nonzero exponents

    friend bool operator<(const Key& a, const Key& b) {
      if (a.pi_half_power != b.pi_half_power) return a.pi_half_power < b.pi_half_power;
      const std::size_t n = std::min(a.gammas.size(), b.gammas.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (a.gammas[i].first != b.gammas[i].first) return a.gammas[i].first < b.gammas[i].first;
        if (a.gammas[i].second != b.gammas[i].second) return a.gammas[i].second < b.gammas[i].second;
      }
      return a.gammas.size() < b.gammas.size();
    }
    friend bool operator==(const Key& a, const Key& b) {
      return a.pi_half_power == b.pi_half_power && a.gammas == b.gammas;
    }

    Key times(const Key& o) const {
      Key k;
      k.pi_half_power = pi_half_power + o.pi_half_power;
      std::map<Rational, int> e;
      for (const auto& [a, x] : gammas) e[a] += x;
      for (const auto& [a, x] : o.gammas) e[a] += x;
      for (const auto& [a, x] : e)
        if (x != 0) k.gammas.emplace_back(a, x);
      return k;
    }

    Key inverse() const {
      Key k;
      k.pi_half_power = -pi_half_power;
      for (const auto& [a, x] : gammas) k.gammas.emplace_back(a, -x);
      return k;
    }
  };

  GammaExpr() = default;

  static GammaExpr rational(const Rational& c) {
    GammaExpr g;
    g.add(Key{}, c);
    return g;
  }

  /// pi^{p/2}.
  static GammaExpr pi_half_power(int p) {
    GammaExpr g;
    g.add(Key{p, {}}, 1);
    return g;
  }

  /// Gamma(z) for rational z that is not a nonpositive integer.
  static GammaExpr gamma(const Rational& z) {
    const mpz_class fl = floor_of(z);
    const Rational a = z - Rational(fl);
    const long k = fl.get_si();
    if (a == 0) {
      if (k <= 0) throw std::domain_error("Gamma has a pole at " + dch::to_string(z));
      return rational(factorial(k - 1));
    }
    Rational c = 1;
    if (k >= 0) {
      c = pochhammer(a, k);
    } else {
      for (long i = 1; i <= -k; ++i) c /= a - i;
    }
    GammaExpr g;
    if (a == frac(1, 2))
      g.add(Key{1, {}}, c);
    else
      g.add(Key{0, {{a, 1}}}, c);
    return g;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }

  GammaExpr& operator+=(const GammaExpr& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  GammaExpr& operator-=(const GammaExpr& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  GammaExpr& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend GammaExpr operator+(GammaExpr a, const GammaExpr& b) { return a += b; }
  friend GammaExpr operator-(GammaExpr a, const GammaExpr& b) { return a -= b; }
  friend GammaExpr operator-(GammaExpr a) { return a *= Rational(-1); }
  friend GammaExpr operator*(GammaExpr a, const Rational& s) { return a *= s; }
  friend GammaExpr operator*(const Rational& s, GammaExpr a) { return a *= s; }

  friend GammaExpr operator*(const GammaExpr& a, const GammaExpr& b) {
    GammaExpr out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add(ka.times(kb), ca * cb);
    return out;
  }

  /// Multiplicative inverse; defined for single-term expressions only.
  GammaExpr inverse() const {
    if (!is_single_term()) throw std::domain_error("GammaExpr inverse needs a single nonzero term");
    const auto& [k, c] = *terms_.begin();
    GammaExpr g;
    g.add(k.inverse(), 1 / c);
    return g;
  }

  friend GammaExpr operator/(const GammaExpr& a, const GammaExpr& b) { return a * b.inverse(); }

  friend bool operator==(const GammaExpr& a, const GammaExpr& b) { return a.terms_ == b.terms_; }

  /// q with *this = q * other, when such a rational exists.
  std::optional<Rational> ratio_to(const GammaExpr& other) const {
    if (other.is_zero()) return std::nullopt;
    if (is_zero()) return Rational(0);
    if (terms_.size() != other.terms_.size()) return std::nullopt;
    std::optional<Rational> q;
    auto it = other.terms_.begin();
    for (const auto& [k, c] : terms_) {
      if (!(k == it->first)) return std::nullopt;
      const Rational r = c / it->second;
      if (q && *q != r) return std::nullopt;
      q = r;
      ++it;
    }
    return q;
  }

  double to_double() const {
    long double sum = 0;
    for (const auto& [k, c] : terms_) {
      long double v = c.get_d();
      v *= std::pow(std::numbers::pi_v<long double>, k.pi_half_power / 2.0L);
      for (const auto& [a, e] : k.gammas) v *= std::pow(std::tgamma(static_cast<long double>(a.get_d())), e);
      sum += v;
    }
    return static_cast<double>(sum);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += dch::to_string(c);
      if (k.pi_half_power != 0) s += " * pi^(" + std::to_string(k.pi_half_power) + "/2)";
      for (const auto& [a, e] : k.gammas) {
        s += " * Gamma(" + dch::to_string(a) + ")";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

  /// Parses the text form produced by to_string; Gamma arguments need not be
  /// reduced.
  static GammaExpr parse(const std::string& text) {
    GammaExpr out;
    if (text == "0") return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(" + ", pos);
      const std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      out += parse_term(term);
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    return out;
  }

 private:
  static GammaExpr parse_term(const std::string& term) {
    GammaExpr value = rational(1);
    std::size_t pos = 0;
    bool first = true;
    while (true) {
      const std::size_t next = term.find(" * ", pos);
      const std::string f = term.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (first) {
        value = rational(parse_rational(f));
        first = false;
      } else if (f.rfind("pi^(", 0) == 0) {
        const auto close = f.find("/2)");
        if (close == std::string::npos || close + 3 != f.size()) throw std::invalid_argument("bad pi factor: " + f);
        value = value * pi_half_power(std::stoi(f.substr(4, close - 4)));
      } else if (f.rfind("Gamma(", 0) == 0) {
        const auto close = f.find(')');
        if (close == std::string::npos) throw std::invalid_argument("bad Gamma factor: " + f);
        const GammaExpr g = gamma(parse_rational(f.substr(6, close - 6)));
        int e = 1;
        if (close + 1 < f.size()) {
          if (f[close + 1] != '^') throw std::invalid_argument("bad Gamma factor: " + f);
          e = std::stoi(f.substr(close + 2));
        }
        const GammaExpr base = e < 0 ? g.inverse() : g;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) value = value * base;
      } else {
        throw std::invalid_argument("unrecognized GammaExpr factor: '" + f + "'");
      }
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    return value;
  }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Key, Rational> terms_;
};

/// |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2).
inline GammaExpr sphere_area(int d) {
  return GammaExpr::rational(2) * GammaExpr::pi_half_power(d) / GammaExpr::gamma(frac(d, 2));
}

}  // namespace dch
