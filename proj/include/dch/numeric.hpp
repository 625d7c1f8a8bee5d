#pragma once

// Floating-point cross-checks: Gauss rules for |t|^{2 kappa} e^{-t^2},
// tensor-product quadrature of (f, g)_H over Z2^d, and seeded Monte Carlo
// for groups without a product weight.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "dch/errors.hpp"
#include "dch/multipoly.hpp"
#include "dch/reflection.hpp"

namespace dch {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Rational kappa;
  int order = 0;
};

inline constexpr int kMaxQuadOrder = 64;

/// Three-term recurrence coefficients beta_0..beta_{m-1} of the monic
/// orthogonal polynomials for |t|^{2 kappa} e^{-t^2}, normalized so that
/// beta_0 = 1 (mass divided out).  Computed exactly from the moments
/// (kappa + 1/2)_j by the Chebyshev algorithm; the weight is even, so all
/// alpha_k vanish.
inline RationalVector quad_recurrence(const Rational& kappa, int m) {
  const int len = 2 * m;
  RationalVector mom(static_cast<std::size_t>(len));
  for (int l = 0; l < len; ++l) mom[l] = l % 2 == 0 ? pochhammer(kappa + frac(1, 2), l / 2) : Rational(0);
  RationalVector beta(static_cast<std::size_t>(m));
  RationalVector alpha(static_cast<std::size_t>(m));
  std::vector<RationalVector> sigma(static_cast<std::size_t>(m));
  sigma[0] = mom;
  alpha[0] = mom[1] / mom[0];
  beta[0] = mom[0];
  for (int k = 1; k < m; ++k) {
    sigma[k].assign(static_cast<std::size_t>(len), Rational(0));
    for (int l = k; l < len - k; ++l) {
      Rational v = sigma[k - 1][l + 1] - alpha[k - 1] * sigma[k - 1][l];
      if (k >= 2) v -= beta[k - 1] * sigma[k - 2][l];
      sigma[k][l] = v;
    }
    if (sigma[k][k] == 0) throw std::runtime_error("moment recurrence broke down");
    alpha[k] = sigma[k][k + 1] / sigma[k][k] - sigma[k - 1][k] / sigma[k - 1][k - 1];
    beta[k] = sigma[k][k] / sigma[k - 1][k - 1];
  }
  return beta;
}

/// m-point Gauss rule for int |t|^{2 kappa} e^{-t^2} dt via the eigen
/// decomposition of the Jacobi matrix.
inline QuadRule quad_rule(const Rational& kappa, int m) {
  if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
  if (m < 1 || m > kMaxQuadOrder) throw std::invalid_argument("quadrature order must be in [1, 64]; use a smaller m");
  const RationalVector beta = quad_recurrence(kappa, m);
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Vec diag = Vec::Zero(m);
  Vec sub(std::max(m - 1, 0));
  for (int k = 1; k < m; ++k) {
    // Numerator and denominator separately so the quotient is rounded in long double.
    const long double b = static_cast<long double>(beta[k].get_num().get_d()) /
                          static_cast<long double>(beta[k].get_den().get_d());
    if (!(b > 0) || !std::isfinite(b)) throw std::runtime_error("Jacobi matrix broke down; use a smaller m");
    sub[k - 1] = std::sqrt(b);
  }
  Eigen::SelfAdjointEigenSolver<Mat> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("Jacobi eigensolver failed; use a smaller m");
  const long double mass = std::tgamma(static_cast<long double>(kappa.get_d()) + 0.5L);
  QuadRule q;
  q.kappa = kappa;
  q.order = m;
  q.nodes.resize(m);
  q.weights.resize(m);
  // Weights from the Christoffel function 1 / sum_k p_k(x)^2 over the
  // orthonormal polynomials; unlike squared eigenvector components this keeps
  // full relative accuracy for the tiny weights at the outermost nodes.
  for (int i = 0; i < m; ++i) {
    const long double x = es.eigenvalues()[i];
    long double prev = 0, cur = 1, sum = 1;
    for (int k = 0; k + 1 < m; ++k) {
      const long double next = (x * cur - (k > 0 ? sub[k - 1] * prev : 0)) / sub[k];
      prev = cur;
      cur = next;
      sum += cur * cur;
    }
    q.nodes[i] = static_cast<double>(x);
    q.weights[i] = static_cast<double>(mass / sum);
  }
  // Symmetrize: the weight is even.
  for (int i = 0; i < m / 2; ++i) {
    const int j = m - 1 - i;
    const double x = 0.5 * (q.nodes[j] - q.nodes[i]);
    const double w = 0.5 * (q.weights[i] + q.weights[j]);
    q.nodes[i] = -x;
    q.nodes[j] = x;
    q.weights[i] = q.weights[j] = w;
  }
  if (m % 2 == 1) q.nodes[m / 2] = 0.0;
  for (double w : q.weights)
    if (!(w > 0)) throw std::runtime_error("nonpositive quadrature weight; use a smaller m");
  return q;
}

/// A CPoly flattened to doubles for repeated evaluation.
class FloatPoly {
 public:
  explicit FloatPoly(const CPoly& p) : d_(p.dimension()) {
    for (const auto& [m, c] : p.terms()) {
      Term t;
      for (int i = 0; i < d_; ++i) t.exps[i] = m[i];
      for (const auto& [b, v] : c.terms()) t.blades.emplace_back(b, v.get_d());
      terms_.push_back(std::move(t));
      for (int i = 0; i < d_; ++i) max_exp_ = std::max(max_exp_, static_cast<int>(m[i]));
    }
  }

  int dimension() const { return d_; }

  /// Blade components at x; powers is scratch space.
  void eval(std::span<const double> x, std::vector<double>& out, std::vector<double>& powers) const {
    const int stride = max_exp_ + 1;
    powers.assign(static_cast<std::size_t>(d_ * stride), 1.0);
    for (int i = 0; i < d_; ++i)
      for (int k = 1; k < stride; ++k) powers[i * stride + k] = powers[i * stride + k - 1] * x[i];
    out.assign(std::size_t{1} << d_, 0.0);
    for (const auto& t : terms_) {
      double mono = 1.0;
      for (int i = 0; i < d_; ++i) mono *= powers[i * stride + t.exps[i]];
      for (const auto& [b, v] : t.blades) out[b] += v * mono;
    }
  }

 private:
  struct Term {
    std::array<int, kHardMaxDimension> exps{};
    std::vector<std::pair<Blade, double>> blades;
  };
  int d_;
  int max_exp_ = 0;
  std::vector<Term> terms_;
};

/// Blade components of f(x), indexed by blade bitmask.
inline std::vector<double> eval_poly(const CPoly& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.dimension()) throw dimension_mismatch("eval_poly: dimension mismatch");
  std::vector<double> out, scratch;
  FloatPoly(f).eval(x, out, scratch);
  return out;
}

/// sc[conj(F) G] for blade component vectors; conj(e_A) e_A = 1.
inline double scalar_pairing(const std::vector<double>& f, const std::vector<double>& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s;
}

struct NumericValue {
  double value = 0.0;
  double abs_err_estimate = 0.0;
};

/// sc[(f, g)_H] on Z2^d by the tensor product of m-point rules.
inline NumericValue numeric_inner_product(const ReflectionData& rd, const CPoly& f, const CPoly& g, int m) {
  if (!rd.is_z2()) throw unsupported_group("tensor quadrature needs a product weight (Z2^d)");
  if (f.dimension() != rd.d || g.dimension() != rd.d) throw dimension_mismatch("integrand dimension mismatch");
  const int d = rd.d;
  for (int i = 0; i < d; ++i)
    if (f.degree_in(i) + g.degree_in(i) > 2 * m - 1)
      throw std::invalid_argument("integrand degree exceeds the exactness of the quadrature rule");
  std::vector<QuadRule> rules;
  for (int i = 0; i < d; ++i) rules.push_back(quad_rule(rd.kappa[i], m));
  const FloatPoly ff(f), fg(g);
  std::vector<int> idx(d, 0);
  std::vector<double> x(d), vf, vg, scratch;
  long double sum = 0, abs_sum = 0;
  while (true) {
    double w = 1.0;
    for (int i = 0; i < d; ++i) {
      x[i] = rules[i].nodes[idx[i]];
      w *= rules[i].weights[idx[i]];
    }
    ff.eval(x, vf, scratch);
    fg.eval(x, vg, scratch);
    const double v = w * scalar_pairing(vf, vg);
    sum += v;
    abs_sum += std::abs(v);
    int i = 0;
    while (i < d && ++idx[i] == m) idx[i++] = 0;
    if (i == d) break;
  }
  return {static_cast<double>(sum), static_cast<double>(abs_sum) * 64 * std::numeric_limits<double>::epsilon()};
}

/// sc[(f, g)_H] by importance sampling from N(0, sigma^2 I).  The integrand
/// grows like |x|^K with K = deg f + deg g + 2 gamma_kappa, so the Gaussian
/// sampler is widened to sigma^2 = (K + d) / (2d), which matches E|x|^2 of
/// |x|^K e^{-|x|^2}; sampling N(0, 1/2) instead leaves a heavy tail that makes
/// the standard error unreliable.  abs_err_estimate is one standard error.
inline NumericValue monte_carlo_inner_product(const ReflectionData& rd, const CPoly& f, const CPoly& g,
                                              std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("Monte Carlo needs at least two samples");
  if (f.dimension() != rd.d || g.dimension() != rd.d) throw dimension_mismatch("integrand dimension mismatch");
  const int d = rd.d;
  const double k = std::max(0, f.degree()) + std::max(0, g.degree()) + 2 * rd.gamma_kappa.get_d();
  const double sigma2 = std::max(0.5, (k + d) / (2.0 * d));
  const double decay = 1.0 - 1.0 / (2.0 * sigma2);
  const double norm = std::pow(2.0 * std::numbers::pi * sigma2, d / 2.0);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(sigma2));
  const FloatPoly ff(f), fg(g);
  std::vector<double> x(d), vf, vg, scratch;
  // Welford accumulation.
  long double mean = 0, m2 = 0;
  for (std::uint64_t i = 1; i <= samples; ++i) {
    double r2 = 0.0;
    for (auto& xi : x) {
      xi = normal(rng);
      r2 += xi * xi;
    }
    ff.eval(x, vf, scratch);
    fg.eval(x, vg, scratch);
    const long double v = scalar_pairing(vf, vg) * weight_eval(rd, x) * norm * std::exp(-decay * r2);
    const long double delta = v - mean;
    mean += delta / static_cast<long double>(i);
    m2 += delta * (v - mean);
  }
  const long double var = m2 / static_cast<long double>(samples - 1);
  return {static_cast<double>(mean), static_cast<double>(std::sqrt(var / static_cast<long double>(samples)))};
}

}  // namespace dch
