#pragma once

#include <optional>
#include <vector>

#include "formality/linalg/matrix.hpp"

namespace formality {

struct RankKernel {
  std::size_t rank = 0;
  std::vector<RationalVector> kernel;  // basis of ker(M), one vector per free column
};

struct EchelonForm {
  IntegerMatrix rows;                // fraction-free row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Fraction-free Gaussian elimination (Bareiss). Every intermediate entry is a
/// minor of the input, so growth stays polynomial.
inline EchelonForm bareiss_echelon(IntegerMatrix m) {
  EchelonForm out;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = IntegerMatrix(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.rows(i, j) = m(i, j);
  return out;
}

// Scales each row by the lcm of its denominators.
inline IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& q : m.row(r)) l = lcm(l, denominator(q));
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = numerator(m(r, c) * l);
  }
  return out;
}

inline std::size_t rank(const IntegerMatrix& m) { return bareiss_echelon(m).pivots.size(); }
inline std::size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

/// Exact rank and kernel basis over Q. Kernel vectors are indexed by the free
/// columns in increasing order, with a 1 in their own free slot.
inline RankKernel rank_kernel(const RationalMatrix& M) {
  EchelonForm e = bareiss_echelon(clear_denominators(M));
  RankKernel out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(M.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(M.cols());
    x[f] = 1;
    for (std::size_t i = e.pivots.size(); i-- > 0;) {
      const std::size_t p = e.pivots[i];
      Rational acc = 0;
      for (std::size_t j = p + 1; j < M.cols(); ++j)
        if (e.rows(i, j) != 0 && x[j] != 0) acc += Rational(e.rows(i, j)) * x[j];
      x[p] = -acc / Rational(e.rows(i, p));
    }
    out.kernel.push_back(std::move(x));
  }
  return out;
}

inline RationalMatrix matrix_from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "vector length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

inline RationalMatrix matrix_from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == rows, "vector length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

/// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<std::size_t> rref_in_place(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) m.add_row_multiple(i, r, -m(i, c));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Some x with A x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero.
inline std::optional<RationalVector> solve(const RationalMatrix& A, std::span<const Rational> b) {
  require(b.size() == A.rows(), "solve: right-hand side length mismatch");
  RationalMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) aug(r, c) = A(r, c);
    aug(r, A.cols()) = b[r];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  RationalVector x(A.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, A.cols());
  return x;
}

/// Incrementally maintained basis of a subspace of Q^n in reduced echelon form.
/// Keeps, for every stored row, its expression in the vectors originally
/// inserted, so coordinates with respect to the inserted basis are available.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return inserted_.size(); }
  const std::vector<RationalVector>& basis() const { return inserted_; }

  /// Adds v if it is independent of the current span; returns whether it was added.
  bool insert(RationalVector v) {
    require(v.size() == ambient_, "subspace insert: length mismatch");
    auto [residue, combo] = reduce(v);
    if (is_zero_vector(residue)) return false;
    std::size_t pivot = 0;
    while (residue[pivot] == 0) ++pivot;
    const Rational inv = 1 / residue[pivot];
    for (auto& x : residue) x *= inv;
    // new row = inv * (v - sum_i combo[i] * rows_[i]), expanded in inserted vectors
    RationalVector expr(inserted_.size() + 1);
    for (std::size_t i = 0; i < combo.size(); ++i)
      if (combo[i] != 0)
        for (std::size_t j = 0; j < inserted_.size(); ++j) expr[j] -= inv * combo[i] * exprs_[i][j];
    expr[inserted_.size()] = inv;
    for (auto& e : exprs_) e.push_back(0);
    // Keep the echelon rows fully reduced with respect to the new pivot.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational k = rows_[i][pivot];
      if (k == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) rows_[i][j] -= k * residue[j];
      for (std::size_t j = 0; j < expr.size(); ++j) exprs_[i][j] -= k * expr[j];
    }
    rows_.push_back(std::move(residue));
    exprs_.push_back(std::move(expr));
    pivots_.push_back(pivot);
    inserted_.push_back(std::move(v));
    return true;
  }

  bool contains(std::span<const Rational> v) const { return is_zero_vector(reduce(v).first); }

  /// Coordinates of v in the inserted basis, or nullopt if v is outside the span.
  std::optional<RationalVector> coordinates(std::span<const Rational> v) const {
    auto [residue, combo] = reduce(v);
    if (!is_zero_vector(residue)) return std::nullopt;
    RationalVector out(inserted_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (combo[i] != 0)
        for (std::size_t j = 0; j < inserted_.size(); ++j) out[j] += combo[i] * exprs_[i][j];
    return out;
  }

 private:
  // residue = v - sum combo[i] * rows_[i]
  std::pair<RationalVector, RationalVector> reduce(std::span<const Rational> v) const {
    RationalVector residue(v.begin(), v.end());
    RationalVector combo(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational k = residue[pivots_[i]];
      if (k == 0) continue;
      combo[i] = k;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (rows_[i][j] != 0) residue[j] -= k * rows_[i][j];
    }
    return {std::move(residue), std::move(combo)};
  }

  std::size_t ambient_;
  std::vector<RationalVector> inserted_;
  std::vector<RationalVector> rows_;
  std::vector<RationalVector> exprs_;
  std::vector<std::size_t> pivots_;
};

}  // namespace formality
