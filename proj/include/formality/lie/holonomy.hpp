#pragma once

#include <map>
#include <vector>

#include "formality/cup_data.hpp"
#include "formality/lie/free_lie.hpp"

namespace formality::lie {

struct GradedLieRanks {
  std::vector<std::pair<std::size_t, Integer>> ranks;  // (degree d, phi_d), d = 1..D

  Integer at(std::size_t d) const { return ranks.at(d - 1).second; }
};

/// Spanning set of a subspace of a tensor-algebra degree, kept in semi-echelon
/// form: stored rows have distinct leading (smallest) codes and are monic there.
class SparseEchelon {
 public:
  bool insert(TensorElement v) {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) {
        const Rational inv = 1 / v.front().second;
        for (auto& [code, c] : v) c *= inv;
        const std::uint64_t lead = v.front().first;
        rows_.emplace(lead, std::move(v));
        return true;
      }
      v = axpy(v, -v.front().second, it->second);
    }
    return false;
  }

  std::size_t dimension() const { return rows_.size(); }
  std::vector<TensorElement> basis() const {
    std::vector<TensorElement> out;
    for (const auto& [lead, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  // v + k * w, both sorted by code
  static TensorElement axpy(const TensorElement& v, const Rational& k, const TensorElement& w) {
    TensorElement out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
      if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || w[j].first < v[i].first) {
        out.emplace_back(w[j].first, k * w[j].second);
        ++j;
      } else {
        Rational s = v[i].second + k * w[j].second;
        if (s != 0) out.emplace_back(v[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<std::uint64_t, TensorElement> rows_;
};

/// Basis of the image of the comultiplication H_2 -> H_1 wedge H_1, as vectors
/// in the degree-2 Lyndon basis ([e_i, e_j], i < j, lexicographic): the row
/// space of the cup tensor viewed as a b2 x C(b1,2) matrix.
inline std::vector<RationalVector> comultiplication_image(const CupData& c) {
  SubspaceBasis span(c.pairs());
  const RationalMatrix m = c.tensor_matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    span.insert(RationalVector(row.begin(), row.end()));
  }
  return span.basis();
}

inline constexpr long default_lie_budget = 100000;

/// Graded ranks phi_d of the holonomy Lie algebra Lie(H_1) / ideal(im d_X).
///
/// The ideal is generated in degree two, so I_{d+1} = [L_1, I_d]; each I_d is
/// tracked inside the tensor algebra, where the free Lie algebra embeds, and
/// phi_d = W(b1, d) - dim I_d.
inline GradedLieRanks holonomy_ranks(const CupData& c, std::size_t max_degree, long budget = default_lie_budget) {
  require(max_degree >= 1, "holonomy ranks need max degree >= 1");
  const std::size_t n = c.b1();
  if (witt_number(n, max_degree) > budget)
    throw BudgetExceeded("W(" + std::to_string(n) + "," + std::to_string(max_degree) + ") exceeds the budget of " +
                         std::to_string(budget));
  GradedLieRanks out;
  out.ranks.emplace_back(1, Integer(n));
  if (max_degree == 1) return out;

  std::vector<TensorElement> ideal;
  {
    SparseEchelon i2;
    for (const auto& v : comultiplication_image(c)) {
      std::map<std::uint64_t, Rational> acc;
      for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p] == 0) continue;
        auto [i, j] = c.pair_at(p);
        acc[i * n + j] += v[p];
        acc[j * n + i] -= v[p];
      }
      i2.insert(normalize(std::move(acc)));
    }
    ideal = i2.basis();
    out.ranks.emplace_back(2, witt_number(n, 2) - static_cast<long>(i2.dimension()));
  }
  for (std::size_t d = 3; d <= max_degree; ++d) {
    SparseEchelon next;
    for (std::size_t g = 0; g < n; ++g) {
      const TensorElement gen{{g, Rational(1)}};
      for (const auto& u : ideal) next.insert(commutator(gen, 1, u, d - 1, n));
    }
    out.ranks.emplace_back(d, witt_number(n, d) - static_cast<long>(next.dimension()));
    ideal = next.basis();
  }
  return out;
}

}  // namespace formality::lie
