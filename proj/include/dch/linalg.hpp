#pragma once

// Dense exact linear algebra over Q: reduced row echelon form, rank,
// nullspace, and solving consistent systems.

#include <optional>
#include <utility>
#include <vector>

#include "dch/rational.hpp"

namespace dch {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<long>(r * cols_),
                          data_.begin() + static_cast<long>((r + 1) * cols_));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // one per nonzero row, increasing
};

inline EchelonForm rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).pivot_columns.size(); }

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that column.
inline std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m v = b (free variables zero), or nullopt if inconsistent.
inline std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const EchelonForm e = rref(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  RationalVector v(m.cols());
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = e.reduced(r, m.cols());
  return v;
}

/// Row-echelon basis that grows one vector at a time; used for rank tracking.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the current basis; returns the reduced vector.
  RationalVector reduce(RationalVector v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational& c = v[pivots_[i]];
      if (c == 0) continue;
      const Rational f = c;
      for (std::size_t k = 0; k < dim_; ++k)
        if (basis_[i][k] != 0) v[k] -= f * basis_[i][k];
    }
    return v;
  }

  /// Adds v if independent; returns whether the rank increased.
  bool add(const RationalVector& v) {
    RationalVector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational inv = 1 / r[p];
    for (auto& c : r) c *= inv;
    for (auto& b : basis_) {
      if (b[p] == 0) continue;
      const Rational f = b[p];
      for (std::size_t k = 0; k < dim_; ++k)
        if (r[k] != 0) b[k] -= f * r[k];
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const RationalVector& v) const { return is_zero(reduce(v)); }
  std::size_t rank() const { return basis_.size(); }
  std::size_t dimension() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace dch
