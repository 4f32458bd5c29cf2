#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "formality/linalg/matrix.hpp"

namespace formality {

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k with t_i | t_{i+1}.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  std::string str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
      os << "Z";
      if (free_rank > 1) os << "^" << free_rank;
      first = false;
    }
    for (const auto& t : torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    return os.str();
  }
};

/// Builds an AbelianGroup from arbitrary cyclic orders, re-sorting into
/// invariant-factor form. Orders 1 are dropped, 0 counts as a free summand.
inline AbelianGroup abelian_group_from_orders(std::size_t free_rank, std::vector<Integer> orders) {
  AbelianGroup g;
  g.free_rank = free_rank;
  std::vector<Integer> finite;
  for (auto& o : orders) {
    o = abs(o);
    if (o == 0)
      ++g.free_rank;
    else if (o != 1)
      finite.push_back(o);
  }
  // Diagonal matrix diag(orders) has the right cokernel; repeatedly replace
  // (a, b) with (gcd, lcm) until the chain divides.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < finite.size(); ++i)
      for (std::size_t j = i + 1; j < finite.size(); ++j) {
        if (finite[j] % finite[i] == 0) continue;
        Integer g2 = gcd(finite[i], finite[j]);
        Integer l2 = lcm(finite[i], finite[j]);
        finite[i] = g2;
        finite[j] = l2;
        changed = true;
      }
  }
  for (auto& o : finite)
    if (o != 1) g.torsion.push_back(o);
  return g;
}

struct SmithForm {
  IntegerMatrix D;  // diagonal, same shape as the input
  IntegerMatrix U;  // rows x rows, unimodular
  IntegerMatrix V;  // cols x cols, unimodular
  std::vector<Integer> divisors;  // nonzero diagonal entries, d_i | d_{i+1}
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> least_abs_entry(const IntegerMatrix& m,
                                                                          std::size_t from) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t r = from; r < m.rows(); ++r)
    for (std::size_t c = from; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      Integer a = abs(m(r, c));
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace detail

/// Smith normal form with transforms: U * M * V == D.
///
/// Pivots on the least-absolute-value entry of the remaining block; entries are
/// arbitrary precision so growth only costs time.
inline SmithForm smith_normal_form(const IntegerMatrix& M) {
  SmithForm s{M, IntegerMatrix::identity(M.rows()), IntegerMatrix::identity(M.cols()), {}};
  IntegerMatrix& D = s.D;
  const std::size_t n = std::min(D.rows(), D.cols());

  for (std::size_t t = 0; t < n; ++t) {
    auto pivot = detail::least_abs_entry(D, t);
    if (!pivot) break;
    for (;;) {
      D.swap_rows(t, pivot->first);
      s.U.swap_rows(t, pivot->first);
      D.swap_cols(t, pivot->second);
      s.V.swap_cols(t, pivot->second);

      bool residue = false;
      for (std::size_t r = t + 1; r < D.rows(); ++r) {
        if (D(r, t) == 0) continue;
        Integer q = D(r, t) / D(t, t);
        D.add_row_multiple(r, t, -q);
        s.U.add_row_multiple(r, t, -q);
        residue = residue || D(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < D.cols(); ++c) {
        if (D(t, c) == 0) continue;
        Integer q = D(t, c) / D(t, t);
        D.add_col_multiple(c, t, -q);
        s.V.add_col_multiple(c, t, -q);
        residue = residue || D(t, c) != 0;
      }
      if (residue) {
        // A remainder smaller than the pivot survived; pivot on it instead.
        pivot = std::pair<std::size_t, std::size_t>{t, t};
        Integer best = abs(D(t, t));
        for (std::size_t r = t + 1; r < D.rows(); ++r)
          if (D(r, t) != 0 && abs(D(r, t)) < best) {
            best = abs(D(r, t));
            pivot = std::pair<std::size_t, std::size_t>{r, t};
          }
        for (std::size_t c = t + 1; c < D.cols(); ++c)
          if (D(t, c) != 0 && abs(D(t, c)) < best) {
            best = abs(D(t, c));
            pivot = std::pair<std::size_t, std::size_t>{t, c};
          }
        continue;
      }

      // Row and column are clear. Enforce divisibility on the remaining block.
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < D.rows() && !bad_row; ++r)
        for (std::size_t c = t + 1; c < D.cols(); ++c)
          if (D(r, c) % D(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (!bad_row) break;
      D.add_row_multiple(t, *bad_row, 1);
      s.U.add_row_multiple(t, *bad_row, 1);
      pivot = std::pair<std::size_t, std::size_t>{t, t};
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
    s.divisors.push_back(D(t, t));
  }
  return s;
}

/// Z^rows / im(M).
inline AbelianGroup cokernel(const IntegerMatrix& M) {
  SmithForm s = smith_normal_form(M);
  AbelianGroup g;
  g.free_rank = M.rows() - s.divisors.size();
  for (const auto& d : s.divisors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntegerMatrix m) {
  require(m.square(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace formality
