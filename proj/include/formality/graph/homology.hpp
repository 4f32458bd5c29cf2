#pragma once

#include <vector>

#include "formality/graph/complex.hpp"
#include "formality/linalg/smith.hpp"

namespace formality::graph {

/// Simplicial boundary map C_d -> C_{d-1} (d >= 1) with the alternating-sign
/// convention; for d = 0 the augmentation C_0 -> Z.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& K, std::size_t d) {
  if (d == 0) {
    IntegerMatrix m(1, K.count(0));
    for (std::size_t c = 0; c < K.count(0); ++c) m(0, c) = 1;
    return m;
  }
  const auto& cols = K.faces(d);
  IntegerMatrix m(K.count(d - 1), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Face& f = cols[c];
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face sub;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != i) sub.push_back(f[j]);
      m(K.index_of(sub), c) = i % 2 ? -1 : 1;
    }
  }
  return m;
}

/// Reduced integral homology H~_0, ..., H~_up_to.
inline std::vector<AbelianGroup> simplicial_homology(const SimplicialComplex& K, std::size_t up_to) {
  // ranks and divisors of boundary maps d_0 .. d_{up_to + 1}
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Integer>> divisors;
  for (std::size_t d = 0; d <= up_to + 1; ++d) {
    if (K.count(d) == 0) {
      ranks.push_back(0);
      divisors.emplace_back();
      continue;
    }
    SmithForm s = smith_normal_form(boundary_matrix(K, d));
    ranks.push_back(s.divisors.size());
    divisors.push_back(std::move(s.divisors));
  }
  std::vector<AbelianGroup> out;
  for (std::size_t i = 0; i <= up_to; ++i) {
    AbelianGroup g;
    g.free_rank = K.count(i) - ranks[i] - ranks[i + 1];
    for (const auto& d : divisors[i + 1])
      if (d != 1) g.torsion.push_back(d);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace formality::graph
