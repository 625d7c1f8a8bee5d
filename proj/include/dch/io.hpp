#pragma once

// JSON and text forms of multivectors, Clifford polynomials and GammaExpr.
//
//   Multivector: {"d": 2, "terms": [{"blade": [1,2], "coeff": "-3/4"}]}
//   CPoly:       {"d": 2, "terms": [{"monomial": [2,0], "coeff": <Multivector>}]}
//   GammaExpr:   {"text": "...", "terms": [{"coeff": "1/2", "pi_half_power": 0,
//                                          "gammas": [{"arg": "5/6", "exp": 1}]}]}

#include <json.hpp>

#include <string>

#include "dch/clifford.hpp"
#include "dch/gamma_expr.hpp"
#include "dch/multipoly.hpp"

namespace dch {

using Json = nlohmann::ordered_json;

inline Json blade_to_json(Blade b) {
  Json out = Json::array();
  for (int i = 0; i < kHardMaxDimension; ++i)
    if (b & (Blade{1} << i)) out.push_back(i + 1);
  return out;
}

inline Blade blade_from_json(const Json& j, int d) {
  Blade b = 0;
  int last = 0;
  for (const auto& idx : j) {
    const int i = idx.get<int>();
    if (i < 1 || i > d) throw std::invalid_argument("blade index out of range");
    if (i <= last) throw std::invalid_argument("blade indices must be strictly increasing");
    last = i;
    b |= Blade{1} << (i - 1);
  }
  return b;
}

inline Json to_json(const Multivector& m) {
  Json terms = Json::array();
  for (const auto& [b, c] : m.terms()) terms.push_back({{"blade", blade_to_json(b)}, {"coeff", to_string(c)}});
  return {{"d", m.dimension()}, {"terms", terms}};
}

inline Multivector multivector_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  Multivector m(d);
  for (const auto& t : j.at("terms"))
    m += Multivector::blade(d, blade_from_json(t.at("blade"), d), parse_rational(t.at("coeff").get<std::string>()));
  return m;
}

inline Json to_json(const CPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::array();
    for (int i = 0; i < p.dimension(); ++i) mono.push_back(static_cast<int>(m[i]));
    terms.push_back({{"monomial", mono}, {"coeff", to_json(c)}});
  }
  return {{"d", p.dimension()}, {"terms", terms}};
}

inline CPoly cpoly_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  CPoly p(d);
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("monomial").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != d) throw std::invalid_argument("monomial length differs from d");
    for (int e : exps)
      if (e < 0 || e > 255) throw std::invalid_argument("monomial exponent out of range");
    const Multivector c = multivector_from_json(t.at("coeff"));
    if (c.dimension() != d) throw std::invalid_argument("coefficient dimension differs from d");
    p.add_term(Monomial::from(exps), c);
  }
  return p;
}

inline Json to_json(const GammaExpr& g) {
  Json terms = Json::array();
  for (const auto& [k, c] : g.terms()) {
    Json gammas = Json::array();
    for (const auto& [a, e] : k.gammas) gammas.push_back({{"arg", to_string(a)}, {"exp", e}});
    terms.push_back({{"coeff", to_string(c)}, {"pi_half_power", k.pi_half_power}, {"gammas", gammas}});
  }
  return {{"text", g.to_string()}, {"terms", terms}};
}

inline GammaExpr gamma_expr_from_json(const Json& j) {
  if (j.is_string()) return GammaExpr::parse(j.get<std::string>());
  GammaExpr out;
  for (const auto& t : j.at("terms")) {
    GammaExpr term = GammaExpr::rational(parse_rational(t.at("coeff").get<std::string>())) *
                     GammaExpr::pi_half_power(t.at("pi_half_power").get<int>());
    for (const auto& g : t.at("gammas")) {
      const GammaExpr base = GammaExpr::gamma(parse_rational(g.at("arg").get<std::string>()));
      const int e = g.at("exp").get<int>();
      for (int i = 0; i < (e < 0 ? -e : e); ++i) term = term * (e < 0 ? base.inverse() : base);
    }
    out += term;
  }
  return out;
}

inline Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

/// "1 - 3/4 e1e2"-style text.
inline std::string to_text(const Multivector& m) {
  if (m.is_zero()) return "0";
  std::string s;
  for (const auto& [b, c] : m.terms()) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string blade;
    for (int i = 0; i < m.dimension(); ++i)
      if (b & (Blade{1} << i)) blade += "e" + std::to_string(i + 1);
    if (blade.empty())
      s += to_string(a);
    else
      s += (a == 1 ? "" : to_string(a) + " ") + blade;
  }
  return s;
}

inline std::string to_text(const CPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_text(c) + ")";
    for (int i = 0; i < p.dimension(); ++i) {
      if (m[i] == 0) continue;
      s += " x" + std::to_string(i + 1);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

}  // namespace dch
