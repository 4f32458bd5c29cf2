#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "formality/cdga/cdga.hpp"

namespace formality::cdga {

/// A monomial in degree-one generators (generator indices) with a coefficient.
struct GeneratorTerm {
  std::vector<std::size_t> generators;
  Rational coeff;
};

/// Exterior algebra on degree-one generators with d prescribed on generators
/// and extended by the Leibniz rule.
inline FiniteCdga exterior_algebra(const std::vector<std::string>& gens,
                                   const std::map<std::size_t, std::vector<GeneratorTerm>>& gen_diff = {}) {
  const std::size_t n = gens.size();
  require(n <= 12, "exterior algebra limited to 12 generators");
  const bool short_names = std::all_of(gens.begin(), gens.end(), [](const auto& s) { return s.size() == 1; });

  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    // lexicographic on the sorted generator lists
    for (std::uint32_t bit = 1; bit; bit <<= 1) {
      if ((a & bit) != (b & bit)) return (a & bit) != 0;
    }
    return false;
  });
  std::vector<std::size_t> index_of(1u << n);
  std::vector<FiniteCdga::BasisElement> basis;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    index_of[masks[k]] = k;
    std::string name;
    for (std::size_t g = 0; g < n; ++g)
      if (masks[k] >> g & 1u) name += (name.empty() || short_names ? "" : "^") + gens[g];
    basis.push_back({name.empty() ? "1" : name, std::popcount(masks[k])});
  }
  FiniteCdga A(std::move(basis));

  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = 0; b < masks.size(); ++b) {
      const std::uint32_t s = masks[a], t = masks[b];
      if (s & t) continue;
      if (s == 0 || t == 0) continue;  // unit products are implicit
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1u) inversions += std::popcount(t & ((1u << i) - 1));
      A.set_product(a, b, Element{{index_of[s | t], inversions % 2 ? -1 : 1}});
    }

  auto monomial = [&](const std::vector<std::size_t>& g) {
    Element e{{0, 1}};
    for (auto gi : g) {
      require(gi < n, "generator index out of range");
      e = A.multiply(e, Element{{index_of[1u << gi], 1}});
    }
    return e;
  };
  std::vector<Element> dgen(n);
  for (const auto& [g, terms] : gen_diff) {
    require(g < n, "generator index out of range");
    for (const auto& t : terms) add_to(dgen[g], monomial(t.generators), t.coeff);
  }
  // d(g_1 ... g_k) = sum_i (-1)^(i-1) g_1 ... d(g_i) ... g_k
  for (std::size_t k = 1; k < masks.size(); ++k) {
    const std::uint32_t s = masks[k];
    Element total;
    int position = 0;
    for (std::size_t gi = 0; gi < n; ++gi) {
      if (!(s >> gi & 1u)) continue;
      Element left{{0, 1}}, right{{0, 1}};
      for (std::size_t gj = 0; gj < n; ++gj) {
        if (!(s >> gj & 1u) || gj == gi) continue;
        Element e{{index_of[1u << gj], 1}};
        if (gj < gi)
          left = A.multiply(left, e);
        else
          right = A.multiply(right, e);
      }
      add_to(total, A.multiply(A.multiply(left, dgen[gi]), right), position % 2 ? -1 : 1);
      ++position;
    }
    A.set_differential(k, std::move(total));
  }
  return A;
}

/// Model of the Heisenberg nilmanifold: wedge(a, b, z) with da = db = 0, dz = ab.
inline FiniteCdga heisenberg() {
  return exterior_algebra({"a", "b", "z"}, {{2, {GeneratorTerm{{0, 1}, 1}}}});
}

inline std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

/// Cohomology algebra of the n-torus: exterior algebra with zero differential.
inline FiniteCdga torus(std::size_t n) { return exterior_algebra(numbered("e", n)); }

/// Cohomology ring of the closed orientable genus-g surface, zero differential.
inline FiniteCdga surface(std::size_t g) {
  require(g >= 1, "surface genus must be at least 1");
  std::vector<FiniteCdga::BasisElement> basis{{"1", 0}};
  for (std::size_t i = 1; i <= g; ++i) {
    basis.push_back({"x" + std::to_string(i), 1});
    basis.push_back({"y" + std::to_string(i), 1});
  }
  basis.push_back({"w", 2});
  FiniteCdga A(std::move(basis));
  const std::size_t top = 2 * g + 1;
  for (std::size_t i = 0; i < g; ++i) A.set_product(1 + 2 * i, 2 + 2 * i, Element{{top, 1}});
  return A;
}

/// Cohomology of a wedge of n circles: H^1 = Q^n, all products zero.
inline FiniteCdga wedge_of_circles(std::size_t n) {
  std::vector<FiniteCdga::BasisElement> basis{{"1", 0}};
  for (auto& name : numbered("e", n)) basis.push_back({name, 1});
  return FiniteCdga(std::move(basis));
}

}  // namespace formality::cdga
