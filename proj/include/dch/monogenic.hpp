#pragma once

// Homogeneous Dunkl-monogenic polynomials M_n = ker D_h in degree n, as an
// exact nullspace, a right Clifford-module generating set, and (for Z2^d) an
// orthogonal basis with exact spherical norms.

#include <cstddef>
#include <map>
#include <vector>

#include "dch/dunkl.hpp"
#include "dch/gamma_expr.hpp"
#include "dch/integrate.hpp"
#include "dch/linalg.hpp"
#include "dch/multipoly.hpp"
#include "dch/reflection.hpp"

namespace dch {

struct MonogenicBasis {
  int degree = 0;
  ReflectionData rd;
  std::vector<CPoly> elements;
  // Spherical pairings sc int conj(P_i) P_j h^2 dSigma; filled for Z2^d.
  std::vector<std::vector<GammaExpr>> gram;
  bool orthogonal = false;

  std::size_t expected_rank = 0;  // C(n+d-2, n)
  std::size_t kernel_dimension = 0;
  bool rank_matches() const { return elements.size() == expected_rank; }

  const GammaExpr& norm(std::size_t j) const { return gram.at(j).at(j); }
};

namespace detail {

// Column layout: (monomial index, blade) -> monomial index * 2^d + blade.
struct CliffordGrid {
  int d;
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;

  CliffordGrid(int d_, int n) : d(d_) {
    if (n >= 0) monomials = monomials_of_degree(d_, n);
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }
  std::size_t blades() const { return std::size_t{1} << d; }
  std::size_t size() const { return monomials.size() * blades(); }

  RationalVector flatten(const CPoly& p) const {
    RationalVector v(size());
    for (const auto& [m, c] : p.terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw std::invalid_argument("polynomial has a term outside the grid degree");
      for (const auto& [b, x] : c.terms()) v[it->second * blades() + b] = x;
    }
    return v;
  }

  CPoly unflatten(const RationalVector& v) const {
    CPoly p(d);
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      std::vector<Multivector::Term> terms;
      for (std::size_t b = 0; b < blades(); ++b)
        if (v[i * blades() + b] != 0) terms.emplace_back(static_cast<Blade>(b), v[i * blades() + b]);
      if (!terms.empty()) p.add_term(monomials[i], Multivector::from_terms(d, std::move(terms)));
    }
    return p;
  }
};

}  // namespace detail

inline std::vector<CPoly> monogenic_kernel(const DunklOperators& ops, int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  const int d = ops.dimension();
  const detail::CliffordGrid cols(d, n), rows(d, n - 1);
  const std::size_t nb = cols.blades();
  std::vector<CPoly> out;
  if (rows.size() == 0) {
    for (const auto& m : cols.monomials)
      for (std::size_t b = 0; b < nb; ++b) out.push_back(CPoly::term(d, m, Multivector::blade(d, static_cast<Blade>(b))));
    return out;
  }
  RationalMatrix a(rows.size(), cols.size());
  for (std::size_t i = 0; i < cols.monomials.size(); ++i) {
    // D_h(x^b e_A) = D_h(x^b) e_A.
    const CPoly image = ops.dirac(CPoly::term(d, cols.monomials[i], Multivector::scalar(d, 1)));
    for (std::size_t b = 0; b < nb; ++b) {
      const RationalVector col = rows.flatten(right_multiply(image, Multivector::blade(d, static_cast<Blade>(b))));
      for (std::size_t r = 0; r < col.size(); ++r)
        if (col[r] != 0) a(r, i * nb + b) = col[r];
    }
  }
  for (const auto& v : nullspace(a)) out.push_back(cols.unflatten(v));
  return out;
}

inline std::vector<CPoly> monogenic_kernel(const ReflectionData& rd, int n) {
  return monogenic_kernel(DunklOperators(rd), n);
}

/// Greedy right-module generators of ker D_h in degree n: a kernel vector is
/// kept when its 2^d right blade multiples are independent of everything
/// kept so far.
inline MonogenicBasis module_basis(const DunklOperators& ops, int n) {
  const int d = ops.dimension();
  MonogenicBasis basis;
  basis.degree = n;
  basis.rd = ops.data();
  basis.expected_rank = d >= 2 || n == 0 ? static_cast<std::size_t>(binomial(n + d - 2, n).get_num().get_ui()) : 0;
  const std::vector<CPoly> kernel = monogenic_kernel(ops, n);
  basis.kernel_dimension = kernel.size();
  const detail::CliffordGrid grid(d, n);
  IncrementalSpan span(grid.size());
  for (const auto& v : kernel) {
    if (span.rank() == kernel.size()) break;
    if (span.contains(grid.flatten(v))) continue;
    IncrementalSpan trial = span;
    bool full = true;
    for (std::size_t b = 0; b < grid.blades() && full; ++b)
      full = trial.add(grid.flatten(right_multiply(v, Multivector::blade(d, static_cast<Blade>(b)))));
    if (!full) continue;
    span = std::move(trial);
    basis.elements.push_back(v);
  }
  return basis;
}

inline MonogenicBasis module_basis(const ReflectionData& rd, int n) { return module_basis(DunklOperators(rd), n); }

/// Gram-Schmidt against the scalar spherical pairing, exactly.  All elements
/// share the degree, so pairings differ from the Gaussian ones by a common
/// factor and the projection coefficients are rational.
inline MonogenicBasis orthonormalize_z2(MonogenicBasis basis) {
  const Z2Integrator integ(basis.rd);
  std::vector<CPoly> done;
  std::vector<Rational> self;
  for (const auto& p : basis.elements) {
    CPoly q = p;
    for (std::size_t i = 0; i < done.size(); ++i) {
      const Rational c = integ.scalar_pairing_ratio(done[i], p) / self[i];
      if (c != 0) q -= done[i] * c;
    }
    const Rational s = integ.scalar_pairing_ratio(q, q);
    if (s == 0) throw internal_error("zero norm during Gram-Schmidt");
    done.push_back(std::move(q));
    self.push_back(s);
  }
  basis.elements = std::move(done);
  const std::size_t k = basis.elements.size();
  basis.gram.assign(k, std::vector<GammaExpr>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      basis.gram[i][j] = integ.spherical_pairing(basis.elements[i], basis.elements[j]);
  basis.orthogonal = true;
  return basis;
}

}  // namespace dch
