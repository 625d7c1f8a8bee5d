#pragma once

// Root systems, positive systems, finite reflection groups and multiplicity
// functions, with the derived index gamma_kappa = sum_{R+} kappa and the
// Dunkl dimension mu = 2 gamma_kappa + d.

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dch/errors.hpp"
#include "dch/multipoly.hpp"
#include "dch/rational.hpp"

namespace dch {

enum class Family { Z2, A, B, I2, Custom };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Z2: return "Z2^d";
    case Family::A: return "A_{d-1}";
    case Family::B: return "B_d";
    case Family::I2: return "I2(m)";
    case Family::Custom: return "custom";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "Z2^d" || s == "Z2" || s == "z2") return Family::Z2;
  if (s == "A" || s == "A_{d-1}" || s == "a") return Family::A;
  if (s == "B" || s == "B_d" || s == "b") return Family::B;
  if (s == "I2" || s == "I2(m)" || s == "i2") return Family::I2;
  throw std::invalid_argument("unknown reflection group family '" + s + "'");
}

struct ReflectionData {
  int d = 0;
  Family family = Family::Custom;
  int family_param = 0;  // d for Z2/A/B, m for I2
  std::vector<RationalVector> roots;
  std::vector<RationalVector> positive_roots;
  std::vector<int> orbit_of;  // orbit label per positive root
  std::vector<Rational> kappa;  // per positive root
  std::vector<LinearMap> group;
  Rational gamma_kappa;
  Rational mu;

  int orbit_count() const {
    return orbit_of.empty() ? 0 : *std::max_element(orbit_of.begin(), orbit_of.end()) + 1;
  }

  /// The per-orbit multiplicities in orbit order.
  RationalVector kappa_per_orbit() const {
    RationalVector out(orbit_count());
    for (std::size_t i = 0; i < positive_roots.size(); ++i) out[orbit_of[i]] = kappa[i];
    return out;
  }

  bool is_z2() const {
    if (static_cast<int>(positive_roots.size()) != d) return false;
    for (int i = 0; i < d; ++i) {
      RationalVector e(d);
      e[i] = 1;
      if (positive_roots[i] != e) return false;
    }
    return true;
  }

  std::string describe() const;
};

inline RationalVector apply_map(const LinearMap& m, const RationalVector& x) {
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = dot(m[i], x);
  return out;
}

inline LinearMap compose(const LinearMap& a, const LinearMap& b) {
  const std::size_t d = a.size();
  LinearMap out(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline LinearMap identity_map(std::size_t d) {
  LinearMap out(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i) out[i][i] = 1;
  return out;
}

namespace detail {

inline RationalVector negated(RationalVector v) {
  for (auto& c : v) c = -c;
  return v;
}

inline bool parallel(const RationalVector& a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

inline std::vector<LinearMap> close_group(const std::vector<LinearMap>& generators, std::size_t d,
                                          std::size_t limit = 200000) {
  std::set<LinearMap> seen{identity_map(d)};
  std::vector<LinearMap> order{identity_map(d)};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : generators) {
      LinearMap next = compose(g, order[head]);
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > limit) throw std::runtime_error("reflection group closure exceeded size limit");
      }
    }
  }
  return order;
}

}  // namespace detail

/// Validates and completes a reflection datum from positive roots (one
/// representative per +-pair) and per-root multiplicities.
inline ReflectionData from_positive_roots(int d, std::vector<RationalVector> positive,
                                          std::vector<Rational> kappa, Family tag = Family::Custom,
                                          int tag_param = 0) {
  if (positive.empty()) throw std::invalid_argument("empty root system");
  if (kappa.size() != positive.size()) throw std::invalid_argument("one multiplicity per positive root required");
  for (const auto& a : positive) {
    if (static_cast<int>(a.size()) != d) throw dimension_mismatch("root dimension mismatch");
    if (is_zero(a)) throw std::invalid_argument("zero root");
  }
  for (const auto& k : kappa)
    if (k < 0) throw std::invalid_argument("multiplicities must be nonnegative");

  ReflectionData rd;
  rd.d = d;
  rd.family = tag;
  rd.family_param = tag_param;
  rd.positive_roots = positive;
  rd.kappa = kappa;
  for (const auto& a : positive) {
    rd.roots.push_back(a);
    rd.roots.push_back(detail::negated(a));
  }

  auto find_positive = [&](const RationalVector& v) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < positive.size(); ++i)
      if (positive[i] == v || positive[i] == detail::negated(v)) return i;
    return std::nullopt;
  };

  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i + 1; j < positive.size(); ++j)
      if (detail::parallel(positive[i], positive[j]))
        throw std::invalid_argument("root system contains parallel roots other than +-alpha");

  std::vector<LinearMap> reflections;
  for (const auto& a : positive) reflections.push_back(reflection_matrix(a));
  for (const auto& s : reflections)
    for (const auto& b : positive)
      if (!find_positive(apply_map(s, b))) throw std::invalid_argument("root set is not closed under its reflections");

  rd.group = detail::close_group(reflections, d);

  // Orbits of +-root pairs under W, labelled by first appearance.
  std::vector<int> orbit(positive.size(), -1);
  int next_label = 0;
  for (std::size_t i = 0; i < positive.size(); ++i) {
    if (orbit[i] >= 0) continue;
    for (const auto& w : rd.group) {
      const auto j = find_positive(apply_map(w, positive[i]));
      if (!j) throw internal_error("group element moved a root outside the root system");
      if (orbit[*j] < 0) orbit[*j] = next_label;
    }
    ++next_label;
  }
  rd.orbit_of = orbit;
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = 0; j < positive.size(); ++j)
      if (orbit[i] == orbit[j] && kappa[i] != kappa[j])
        throw std::invalid_argument("multiplicity function is not W-invariant");

  rd.gamma_kappa = std::accumulate(kappa.begin(), kappa.end(), Rational(0));
  if (rd.gamma_kappa <= 0) throw std::invalid_argument("gamma_kappa must be positive");
  rd.mu = 2 * rd.gamma_kappa + d;
  return rd;
}

/// Builds a standard family.  `param` is d for Z2^d, A_{d-1} (acting on R^d)
/// and B_d, and m for I2(m).  `kappa` lists one value per orbit (or a single
/// value applied to every orbit).
inline ReflectionData build_group(Family family, int param, const RationalVector& kappa) {
  std::vector<RationalVector> candidates;
  int d = param;
  auto unit = [&](int i) {
    RationalVector e(d);
    e[i] = 1;
    return e;
  };
  auto combo = [&](int i, int j, int sj) {
    RationalVector e(d);
    e[i] = 1;
    e[j] = sj;
    return e;
  };
  switch (family) {
    case Family::Z2:
      if (d < 1) throw std::invalid_argument("Z2^d needs d >= 1");
      for (int i = 0; i < d; ++i) candidates.push_back(unit(i));
      break;
    case Family::A:
      if (d < 2) throw std::invalid_argument("A_{d-1} needs d >= 2");
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) candidates.push_back(combo(i, j, -1));
      break;
    case Family::B:
      if (d < 2) throw std::invalid_argument("B_d needs d >= 2");
      for (int i = 0; i < d; ++i) candidates.push_back(unit(i));
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          candidates.push_back(combo(i, j, -1));
          candidates.push_back(combo(i, j, 1));
        }
      break;
    case Family::I2:
      d = 2;
      if (param == 1) {
        candidates.push_back(unit(0));
      } else if (param == 2) {
        candidates = {unit(0), unit(1)};
      } else if (param == 4) {
        candidates = {unit(0), unit(1), combo(0, 1, -1), combo(0, 1, 1)};
      } else {
        throw std::invalid_argument("I2(m) has rational roots only for m in {1, 2, 4}");
      }
      break;
    case Family::Custom:
      throw std::invalid_argument("use from_positive_roots for custom root systems");
  }
  if (d > max_dimension()) throw std::invalid_argument("dimension exceeds configured maximum");

  // Positive system: <alpha, beta> > 0 for beta = (d, d-1, ..., 1).
  RationalVector beta(d);
  for (int i = 0; i < d; ++i) beta[i] = d - i;
  std::vector<RationalVector> positive;
  for (auto& a : candidates) {
    const Rational s = dot(a, beta);
    if (s == 0) throw internal_error("positive-system selector lies on a mirror");
    positive.push_back(s > 0 ? a : detail::negated(a));
  }

  // Provisional unit multiplicities to learn the orbit structure.
  ReflectionData probe = from_positive_roots(d, positive, RationalVector(positive.size(), Rational(1)), family, param);
  const int orbits = probe.orbit_count();
  RationalVector per_orbit = kappa;
  if (per_orbit.size() == 1 && orbits > 1) per_orbit.assign(orbits, kappa[0]);
  if (static_cast<int>(per_orbit.size()) != orbits)
    throw std::invalid_argument(family_name(family) + " has " + std::to_string(orbits) +
                                " multiplicity orbit(s); got " + std::to_string(kappa.size()) + " value(s)");
  RationalVector per_root(positive.size());
  for (std::size_t i = 0; i < positive.size(); ++i) per_root[i] = per_orbit[probe.orbit_of[i]];
  return from_positive_roots(d, positive, per_root, family, param);
}

inline std::string ReflectionData::describe() const {
  std::string s = family_name(family) + " d=" + std::to_string(d);
  if (family == Family::I2) s += " m=" + std::to_string(family_param);
  s += " kappa=(";
  const auto k = kappa_per_orbit();
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + to_string(k[i]);
  s += ") mu=" + to_string(mu);
  return s;
}

/// h_kappa(x)^2 = prod_{alpha in R+} |<alpha, x>|^{2 kappa(alpha)}.
inline double weight_eval(const ReflectionData& rd, std::span<const double> x) {
  if (static_cast<int>(x.size()) != rd.d) throw dimension_mismatch("weight_eval: dimension mismatch");
  double w = 1.0;
  for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) {
    double s = 0.0;
    for (int i = 0; i < rd.d; ++i) s += rd.positive_roots[r][i].get_d() * x[i];
    w *= std::pow(std::abs(s), 2.0 * rd.kappa[r].get_d());
  }
  return w;
}

/// Exact h_kappa(x)^2 at a rational point when every 2 kappa is an integer.
inline std::optional<Rational> weight_eval_exact(const ReflectionData& rd, const RationalVector& x) {
  Rational w = 1;
  for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) {
    const Rational twice = 2 * rd.kappa[r];
    if (!is_integer(twice)) return std::nullopt;
    Rational s = dot(rd.positive_roots[r], x);
    if (s < 0) s = -s;
    w *= pow(s, twice.get_num().get_si());
  }
  return w;
}

}  // namespace dch
