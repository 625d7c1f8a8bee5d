#pragma once

// The verification suite: every identity of the Hermite construction checked
// per (reflection group, degree n) tuple, with one record per check and tuple.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dch/dunkl.hpp"
#include "dch/hermite.hpp"
#include "dch/integrate.hpp"
#include "dch/io.hpp"
#include "dch/monogenic.hpp"
#include "dch/norms.hpp"
#include "dch/numeric.hpp"

namespace dch {

enum class CheckStatus { ExactPass, NumericPass, Fail, Skipped };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::ExactPass: return "exact-pass";
    case CheckStatus::NumericPass: return "numeric-pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckInfo {
  int id;
  const char* name;
  const char* description;
};

inline const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = {
      {1, "explicit-table", "H_0..H_4 equal their explicit radial forms"},
      {2, "radial-actions", "D_h(x^s P_n) = -s x^{s-1} P_n (s even), -(s+mu+2n-1) x^{s-1} P_n (s odd)"},
      {3, "spherical-decomposition", "x D_h f + m f + Gamma_kappa f = 0; Gamma_kappa P_n = -n P_n; Gamma_kappa(x P_n) = (mu+n-1) x P_n"},
      {4, "rodrigues", "D_h^s (e^{-|x|^2} P_n) = e^{-|x|^2} H_s"},
      {5, "lowering-and-ode", "D_h H_s = C(s) H_{s-1}; D_h^2 H_s - 2x D_h H_s - C(s) H_s = 0"},
      {6, "three-term-recurrence", "H_{s+1} = -2x H_s + C(s) H_{s-1}"},
      {7, "orthogonality-and-pairings", "(H_s, H_t)_H = 0 for s != t; (x^s P, x^t P)_H closed form; D_+ adjoint to D_h"},
      {8, "laguerre-form", "H_s equals its generalized Laguerre form; radial coefficient recurrences and seeds"},
      {9, "hermite-norms", "(H_s, H_s)_H equals the closed-form norm; gamma_s / gamma_{s-1} = C(s)"},
      {10, "numeric-crosscheck", "quadrature and Monte Carlo agree with the exact values"},
      {11, "module-rank", "right-module rank of M_n equals C(n+d-2, n)"},
  };
  return catalog;
}

struct CheckRecord {
  int id = 0;
  std::string check;
  std::string group;
  int d = 0;
  std::string kappa;
  std::string mu;
  int n = 0;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  std::string witness;
};

struct VerifyConfig {
  std::vector<ReflectionData> groups;
  int min_n = 0;
  int max_n = 3;
  int max_s = 8;
  int max_closed_form_s = 6;
  int max_decomposition_degree = 6;
  int max_adjoint_degree = 4;
  int quad_order = 16;
  std::uint64_t mc_samples = 1000000;
  std::uint64_t seed = 20240611;
  int jobs = 1;
  bool all_generators = true;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  std::map<CheckStatus, int> counts() const {
    std::map<CheckStatus, int> c;
    for (auto s : {CheckStatus::ExactPass, CheckStatus::NumericPass, CheckStatus::Fail, CheckStatus::Skipped}) c[s] = 0;
    for (const auto& r : records) ++c[r.status];
    return c;
  }
  int failures() const { return counts().at(CheckStatus::Fail); }

  Json to_json() const {
    Json recs = Json::array();
    for (const auto& r : records)
      recs.push_back({{"id", r.id},
                      {"check", r.check},
                      {"group", r.group},
                      {"d", r.d},
                      {"kappa", r.kappa},
                      {"mu", r.mu},
                      {"n", r.n},
                      {"status", status_name(r.status)},
                      {"detail", r.detail},
                      {"witness", r.witness}});
    Json summary;
    const auto c = counts();
    for (const auto& [s, k] : c) summary[status_name(s)] = k;
    summary["total"] = records.size();
    return {{"records", recs}, {"summary", summary}};
  }

  std::string to_text() const {
    std::string out;
    for (const auto& r : records) {
      char head[160];
      std::snprintf(head, sizeof head, "%-13s %2d %-27s %-8s d=%d kappa=(%s) n=%d", status_name(r.status).c_str(), r.id,
                    r.check.c_str(), r.group.c_str(), r.d, r.kappa.c_str(), r.n);
      out += head;
      if (!r.detail.empty()) out += "  " + r.detail;
      out += "\n";
      if (!r.witness.empty()) out += "    witness: " + r.witness + "\n";
    }
    const auto c = counts();
    out += "summary: " + std::to_string(c.at(CheckStatus::ExactPass)) + " exact-pass, " +
           std::to_string(c.at(CheckStatus::NumericPass)) + " numeric-pass, " + std::to_string(c.at(CheckStatus::Fail)) +
           " fail, " + std::to_string(c.at(CheckStatus::Skipped)) + " skipped\n";
    return out;
  }
};

namespace detail {

inline std::string clip(const std::string& s, std::size_t n = 400) { return s.size() <= n ? s : s.substr(0, n) + " ..."; }

inline std::string kappa_text(const ReflectionData& rd) {
  std::string s;
  for (const auto& k : rd.kappa_per_orbit()) s += (s.empty() ? "" : ",") + to_string(k);
  return s;
}

/// Outcome of one check on one tuple: the first failure wins.
struct Outcome {
  bool failed = false;
  bool numeric = false;
  bool skipped = false;
  std::string witness;
  std::vector<std::string> notes;

  void require(bool ok, const std::function<std::string()>& why) {
    if (!ok && !failed) {
      failed = true;
      witness = clip(why());
    }
  }
};

// Small deterministic homogeneous test polynomials.
inline CPoly random_homogeneous(int d, int m, std::mt19937_64& rng, int terms = 3) {
  const auto monos = monomials_of_degree(d, m);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<Blade> blade(0, (Blade{1} << d) - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  CPoly p(d);
  while (p.is_zero())
    for (int k = 0; k < terms; ++k) p.add_term(monos[pick(rng)], Multivector::blade(d, blade(rng), frac(num(rng), den(rng))));
  return p;
}

struct TupleContext {
  const ReflectionData& rd;
  const VerifyConfig& cfg;
  int n;
  DunklOperators ops;
  MonogenicBasis basis;
  std::vector<HermiteFamily> families;
  std::vector<GammaExpr> norms;  // spherical norms of the generators (Z2^d)

  TupleContext(const ReflectionData& r, const VerifyConfig& c, int n_) : rd(r), cfg(c), n(n_), ops(r) {
    basis = module_basis(ops, n);
    if (rd.is_z2()) {
      basis = orthonormalize_z2(std::move(basis));
      for (std::size_t j = 0; j < basis.elements.size(); ++j) norms.push_back(basis.norm(j));
    }
    const std::size_t count = cfg.all_generators ? basis.elements.size() : std::min<std::size_t>(1, basis.elements.size());
    for (std::size_t j = 0; j < count; ++j) families.push_back(hermite_generate(ops, basis.elements[j], cfg.max_s));
  }

  int d() const { return rd.d; }
  const Rational& mu() const { return rd.mu; }
};

inline std::string sj(int s, std::size_t j) { return "s=" + std::to_string(s) + " generator=" + std::to_string(j); }

inline Outcome check_explicit_table(const TupleContext& t) {
  Outcome o;
  const int d = t.d();
  const Rational a = t.mu() + 2 * t.n;
  const CPoly x1 = x_power(d, 1), x2 = x_power(d, 2), x3 = x_power(d, 3), x4 = x_power(d, 4);
  const CPoly one = CPoly::constant(d, Multivector::scalar(d, 1));
  const std::vector<CPoly> radial = {one, x1 * Rational(-2), x2 * Rational(4) + one * Rational(2 * a),
                                     -(x3 * Rational(8) + x1 * Rational(4 * (a + 2))),
                                     x4 * Rational(16) + x2 * Rational(16 * (a + 2)) + one * Rational(4 * (a + 2) * a)};
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const auto& f = t.families[j];
    for (int s = 0; s <= std::min(4, t.cfg.max_s); ++s) {
      const CPoly expect = radial[s] * f.p;
      o.require(expect == f.polys[s], [&] { return sj(s, j) + " difference " + to_text(f.polys[s] - expect); });
    }
  }
  if (t.cfg.max_s < 4) o.notes.push_back("table truncated at max_s");
  return o;
}

inline Outcome check_radial_actions(const TupleContext& t) {
  Outcome o;
  const int d = t.d();
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const CPoly& p = t.families[j].p;
    for (int s = 0; s <= t.cfg.max_s; ++s) {
      const CPoly xs = x_power(d, s) * p;
      const CPoly lhs = t.ops.dirac(xs);
      CPoly rhs(d);
      if (s > 0) {
        const Rational c = s % 2 == 0 ? Rational(-s) : Rational(-(s + t.mu() + 2 * t.n - 1));
        rhs = x_power(d, s - 1) * p * c;
      }
      o.require(lhs == rhs, [&] { return sj(s, j) + " difference " + to_text(lhs - rhs); });
    }
  }
  return o;
}

inline Outcome check_spherical_decomposition(const TupleContext& t, std::mt19937_64& rng) {
  Outcome o;
  const int d = t.d();
  const CPoly x = x_poly(d);
  for (int m = 0; m <= t.cfg.max_decomposition_degree; ++m) {
    for (int trial = 0; trial < 2; ++trial) {
      const CPoly f = random_homogeneous(d, m, rng);
      const CPoly r = x * t.ops.dirac(f) + f * Rational(m) + t.ops.gamma_sph(f);
      o.require(r.is_zero(), [&] { return "m=" + std::to_string(m) + " f=" + to_text(f) + " residual " + to_text(r); });
    }
  }
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const CPoly& p = t.families[j].p;
    const CPoly gp = t.ops.gamma_sph(p);
    o.require(gp == p * Rational(-t.n), [&] { return "Gamma_kappa P_n, generator " + std::to_string(j); });
    const CPoly xp = x * p;
    const CPoly gxp = t.ops.gamma_sph(xp);
    o.require(gxp == xp * (t.mu() + t.n - 1), [&] { return "Gamma_kappa x P_n, generator " + std::to_string(j); });
  }
  return o;
}

inline Outcome check_rodrigues(const TupleContext& t) {
  Outcome o;
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const auto& f = t.families[j];
    GaussianDressed g = GaussianDressed::standard(f.p);
    const SPoly exponent = g.exponent;
    for (int s = 0; s <= t.cfg.max_s; ++s) {
      if (s > 0) g = t.ops.gaussian_dirac(g);
      o.require(g.exponent == exponent && g.poly == f.polys[s],
                [&] { return sj(s, j) + " difference " + to_text(g.poly - f.polys[s]); });
    }
  }
  return o;
}

inline Outcome check_lowering_and_ode(const TupleContext& t) {
  Outcome o;
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const auto& f = t.families[j];
    for (int s = 0; s <= t.cfg.max_s; ++s) {
      const CPoly lowered = t.ops.dirac(f.polys[s]);
      const CPoly expect = s == 0 ? CPoly(t.d()) : f.polys[s - 1] * c_coefficient(s, f.mu, f.n);
      o.require(lowered == expect, [&] { return "lowering " + sj(s, j) + " difference " + to_text(lowered - expect); });
      const CPoly r = differential_equation_residual(t.ops, f.polys[s], s, f.mu, f.n);
      o.require(r.is_zero(), [&] { return "differential equation " + sj(s, j) + " residual " + to_text(r); });
    }
  }
  return o;
}

inline Outcome check_three_term(const TupleContext& t) {
  Outcome o;
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const auto& f = t.families[j];
    for (int s = 0; s < t.cfg.max_s; ++s) {
      const CPoly next = three_term_next(f.polys[s], s > 0 ? f.polys[s - 1] : CPoly(t.d()), s, f.mu, f.n);
      o.require(next == f.polys[s + 1], [&] { return sj(s, j) + " difference " + to_text(next - f.polys[s + 1]); });
    }
  }
  return o;
}

inline Outcome check_pairings(const TupleContext& t, std::mt19937_64& rng) {
  Outcome o;
  const int d = t.d();
  if (!t.rd.is_z2()) {
    // No exact integration for this group: Monte Carlo on low-degree pairs.
    if (t.families.empty() || t.cfg.max_s < 3) {
      o.skipped = true;
      return o;
    }
    const auto& f = t.families[0];
    for (auto [s, u] : {std::pair{0, 2}, std::pair{1, 3}}) {
      const NumericValue v =
          monte_carlo_inner_product(t.rd, f.polys[s], f.polys[u], t.cfg.mc_samples, t.cfg.seed + 97 * s + u);
      o.require(std::abs(v.value) <= 3 * v.abs_err_estimate, [&] {
        return "Monte Carlo (H_" + std::to_string(s) + ", H_" + std::to_string(u) + ") = " + std::to_string(v.value) +
               " +- " + std::to_string(v.abs_err_estimate);
      });
      o.notes.push_back("MC(H" + std::to_string(s) + ",H" + std::to_string(u) + ")=" + std::to_string(v.value) + "+-" +
                        std::to_string(v.abs_err_estimate));
    }
    o.numeric = true;
    return o;
  }
  const Z2Integrator integ(t.rd);
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const auto& f = t.families[j];
    for (int s = 0; s <= t.cfg.max_s; ++s)
      for (int u = s + 1; u <= t.cfg.max_s; ++u) {
        const GammaExpr v = integ.inner_product(f.polys[s], f.polys[u]);
        o.require(v.is_zero(), [&] { return "(H_s, H_t) " + sj(s, j) + " t=" + std::to_string(u) + " = " + v.to_string(); });
        o.require(integ.inner_product_full(f.polys[s], f.polys[u]).is_zero(),
                  [&] { return "Clifford-valued (H_s, H_t) nonzero, " + sj(s, j) + " t=" + std::to_string(u); });
      }
    for (std::size_t i = 0; i < j; ++i)
      for (int s = 0; s <= t.cfg.max_s; ++s) {
        const GammaExpr v = integ.inner_product(t.families[i].polys[s], f.polys[s]);
        o.require(v.is_zero(), [&] { return "cross-generator " + std::to_string(i) + " vs " + sj(s, j) + " = " + v.to_string(); });
      }
    const GammaExpr norm = integ.spherical_pairing(f.p, f.p);
    for (int s = 0; s <= t.cfg.max_closed_form_s; ++s)
      for (int u = 0; u <= t.cfg.max_closed_form_s; ++u) {
        const GammaExpr v = integ.inner_product(x_power(d, s) * f.p, x_power(d, u) * f.p);
        const GammaExpr c = radial_pairing_closed_form(s, u, t.n, t.mu(), norm);
        o.require(v == c, [&] {
          return "(x^s P, x^t P) " + sj(s, j) + " t=" + std::to_string(u) + ": " + v.to_string() + " vs " + c.to_string();
        });
      }
    const int k = t.cfg.max_adjoint_degree;
    auto check_adjoint = [&](const RationalVector& p, const RationalVector& q) {
      const AdjointSides a = adjoint_sides(t.ops, integ, p, q, f.p);
      o.require(a.equal(), [&] { return "adjointness generator " + std::to_string(j) + ": " + a.raised.to_string() + " vs " + a.lowered.to_string(); });
    };
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        RationalVector p(a + 1), q(b + 1);
        p[a] = 1;
        q[b] = 1;
        check_adjoint(p, q);
      }
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    for (int trial = 0; trial < 3; ++trial) {
      RationalVector p(k + 1), q(k + 1);
      for (auto& c : p) c = frac(num(rng), den(rng));
      for (auto& c : q) c = frac(num(rng), den(rng));
      check_adjoint(p, q);
    }
  }
  return o;
}

inline Outcome check_laguerre(const TupleContext& t) {
  Outcome o;
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const auto& f = t.families[j];
    for (int s = 0; s <= t.cfg.max_s; ++s)
      o.require(laguerre_oracle_compare(f, s), [&] { return "Laguerre form " + sj(s, j); });
    const RecurrenceReport rep = coeff_recurrence_check(f);
    o.require(rep.ok(), [&] {
      std::string w = "coefficient recurrences, generator " + std::to_string(j) + ":";
      for (const auto& e : rep.failures) w += " " + e;
      return w;
    });
    if (j > 0)
      o.require(f.radial == t.families[0].radial,
                [&] { return "radial coefficients differ between generators 0 and " + std::to_string(j); });
  }
  return o;
}

inline Outcome check_norms(const TupleContext& t) {
  Outcome o;
  if (!t.rd.is_z2()) {
    o.skipped = true;
    o.notes.push_back("no exact integration for this group");
    return o;
  }
  bool unit_sphere_any = false;
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const auto& f = t.families[j];
    GammaExpr prev;
    for (int s = 0; s <= t.cfg.max_s; ++s) {
      const HermiteNorm g = gamma_norm(f, t.norms[j], s);
      unit_sphere_any = unit_sphere_any || g.unit_sphere_matches();
      o.require(g.sphere_averaged_matches(), [&] {
        return "norm " + sj(s, j) + ": " + g.sphere_averaged.to_string() + " vs closed form " + g.closed_form.to_string();
      });
      o.require(g.ladder_matches(), [&] { return "ladder " + sj(s, j) + ": " + g.ladder.to_string(); });
      if (s > 0) {
        const auto r = g.sphere_averaged.ratio_to(prev);
        o.require(r && *r == c_coefficient(s, f.mu, f.n), [&] {
          return "gamma_s / gamma_{s-1} " + sj(s, j) + " = " + (r ? to_string(*r) : std::string("not rational"));
        });
      }
      prev = g.sphere_averaged;
    }
  }
  o.notes.push_back(std::string("convention: sphere-averaged normalization of P_n") +
                    (unit_sphere_any ? "; unit-sphere normalization also matched" : "; unit-sphere normalization differs by |S^{d-1}|"));
  return o;
}

inline Outcome check_numeric(const TupleContext& t) {
  Outcome o;
  o.numeric = true;
  if (t.families.empty()) {
    o.skipped = true;
    return o;
  }
  if (!t.rd.is_z2()) {
    if (t.cfg.max_s < 4) {
      o.skipped = true;
      return o;
    }
    const auto& f = t.families[0];
    const NumericValue v = monte_carlo_inner_product(t.rd, f.polys[2], f.polys[4], t.cfg.mc_samples, t.cfg.seed);
    o.require(std::abs(v.value) <= 3 * v.abs_err_estimate, [&] {
      return "Monte Carlo (H_2, H_4) = " + std::to_string(v.value) + " +- " + std::to_string(v.abs_err_estimate);
    });
    o.notes.push_back("MC(H2,H4)=" + std::to_string(v.value) + "+-" + std::to_string(v.abs_err_estimate) + " samples=" +
                      std::to_string(t.cfg.mc_samples));
    return o;
  }
  const Z2Integrator integ(t.rd);
  int compared = 0, beyond = 0;
  for (std::size_t j = 0; j < t.families.size(); ++j) {
    const auto& f = t.families[j];
    std::vector<double> self(f.polys.size());
    for (int s = 0; s <= t.cfg.max_s; ++s) self[s] = integ.inner_product(f.polys[s], f.polys[s]).to_double();
    for (int s = 0; s <= t.cfg.max_s; ++s)
      for (int u = s; u <= t.cfg.max_s; ++u) {
        bool fits = true;
        for (int i = 0; i < t.d(); ++i)
          fits = fits && f.polys[s].degree_in(i) + f.polys[u].degree_in(i) <= 2 * t.cfg.quad_order - 1;
        if (!fits) {
          ++beyond;
          continue;
        }
        const NumericValue q = numeric_inner_product(t.rd, f.polys[s], f.polys[u], t.cfg.quad_order);
        const double exact = integ.inner_product(f.polys[s], f.polys[u]).to_double();
        const double scale = std::sqrt(self[s] * self[u]);
        const double err = std::abs(q.value - exact) / scale;
        o.require(err <= 1e-10, [&] {
          return "quadrature " + sj(s, j) + " t=" + std::to_string(u) + ": " + std::to_string(q.value) + " vs " +
                 std::to_string(exact) + " relative " + std::to_string(err);
        });
        ++compared;
      }
  }
  o.notes.push_back("pairs=" + std::to_string(compared) + (beyond ? " beyond-exactness=" + std::to_string(beyond) : ""));
  if (compared == 0) o.skipped = true;
  return o;
}

inline Outcome check_module_rank(const TupleContext& t) {
  Outcome o;
  const auto& b = t.basis;
  o.notes.push_back("kernel-dim=" + std::to_string(b.kernel_dimension) + " rank=" + std::to_string(b.elements.size()) +
                    " expected=" + std::to_string(b.expected_rank));
  o.require(b.kernel_dimension == b.expected_rank * (std::size_t{1} << t.d()), [&] {
    return "kernel dimension " + std::to_string(b.kernel_dimension) + " is not 2^d * " + std::to_string(b.expected_rank);
  });
  o.require(b.rank_matches(), [&] {
    return "measured module rank " + std::to_string(b.elements.size()) + " differs from C(n+d-2, n) = " +
           std::to_string(b.expected_rank);
  });
  for (std::size_t j = 0; j < b.elements.size(); ++j) {
    const CPoly& p = b.elements[j];
    o.require(p.is_homogeneous() && p.degree() == t.n && t.ops.dirac(p).is_zero(),
              [&] { return "generator " + std::to_string(j) + " is not a homogeneous monogenic of degree n"; });
  }
  return o;
}

inline std::vector<CheckRecord> run_tuple(const ReflectionData& rd, const VerifyConfig& cfg, int n) {
  TupleContext t(rd, cfg, n);
  std::mt19937_64 rng(cfg.seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL) ^
                      (static_cast<std::uint64_t>(rd.d) << 32) ^ static_cast<std::uint64_t>(rd.family));
  std::vector<CheckRecord> out;
  for (const auto& info : check_catalog()) {
    Outcome o;
    switch (info.id) {
      case 1: o = check_explicit_table(t); break;
      case 2: o = check_radial_actions(t); break;
      case 3: o = check_spherical_decomposition(t, rng); break;
      case 4: o = check_rodrigues(t); break;
      case 5: o = check_lowering_and_ode(t); break;
      case 6: o = check_three_term(t); break;
      case 7: o = check_pairings(t, rng); break;
      case 8: o = check_laguerre(t); break;
      case 9: o = check_norms(t); break;
      case 10: o = check_numeric(t); break;
      case 11: o = check_module_rank(t); break;
    }
    CheckRecord r;
    r.id = info.id;
    r.check = info.name;
    r.group = family_name(rd.family);
    r.d = rd.d;
    r.kappa = kappa_text(rd);
    r.mu = to_string(rd.mu);
    r.n = n;
    r.status = o.failed    ? CheckStatus::Fail
               : o.skipped ? CheckStatus::Skipped
               : o.numeric ? CheckStatus::NumericPass
                           : CheckStatus::ExactPass;
    r.witness = o.witness;
    r.detail = "generators=" + std::to_string(t.families.size());
    for (const auto& note : o.notes) r.detail += "; " + note;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Runs every check on every (group, n) tuple.  Tuples run on up to cfg.jobs
/// threads; records are assembled in tuple order, so the report does not
/// depend on scheduling.
inline VerificationReport run_verification(const VerifyConfig& cfg) {
  if (cfg.min_n < 0 || cfg.max_n < cfg.min_n) throw std::invalid_argument("invalid n range");
  if (cfg.max_s < 0) throw std::invalid_argument("max_s must be nonnegative");
  if (cfg.quad_order < 1 || cfg.quad_order > kMaxQuadOrder) throw std::invalid_argument("quad order must be in [1, 64]");
  std::vector<std::pair<const ReflectionData*, int>> tuples;
  for (const auto& rd : cfg.groups)
    for (int n = cfg.min_n; n <= cfg.max_n; ++n) tuples.emplace_back(&rd, n);
  std::vector<std::vector<CheckRecord>> results(tuples.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, cfg.jobs));
  for (std::size_t start = 0; start < tuples.size(); start += jobs) {
    std::vector<std::future<std::vector<CheckRecord>>> batch;
    for (std::size_t i = start; i < std::min(tuples.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                 [&cfg, tp = tuples[i]] { return detail::run_tuple(*tp.first, cfg, tp.second); }));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  VerificationReport report;
  for (auto& r : results)
    for (auto& rec : r) report.records.push_back(std::move(rec));
  return report;
}

}  // namespace dch
