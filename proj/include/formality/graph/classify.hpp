#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formality/cup_data.hpp"
#include "formality/graph/homology.hpp"

namespace formality::graph {

/// Part sizes (sorted) if g is complete multipartite, i.e. the components of
/// its complement are cliques.
inline std::optional<std::vector<std::size_t>> complete_multipartite(const SimpleGraph& g) {
  const SimpleGraph c = g.complement();
  std::vector<std::size_t> parts;
  for (const auto& comp : c.components()) {
    if (!c.is_clique(comp)) return std::nullopt;
    parts.push_back(comp.size());
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

/// Three vertices u, v, w with uv an edge and w adjacent to neither: an induced
/// K_1 + K_2, which rules out complete multipartite graphs.
inline std::optional<std::vector<std::size_t>> non_multipartite_witness(const SimpleGraph& g) {
  const std::size_t n = g.vertices();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (std::size_t w = 0; w < n; ++w)
        if (w != u && w != v && !g.adjacent(u, w) && !g.adjacent(v, w)) return std::vector<std::size_t>{u, v, w};
    }
  return std::nullopt;
}

struct ClassificationVerdict {
  bool quasi_kahler = false;
  bool kahler = false;
  std::vector<std::size_t> partition;   // when complete multipartite
  bool is_tree = false;
  std::vector<std::size_t> violation;   // induced K_1 + K_2, when not multipartite
  std::string theorem;                  // rule tag
  std::string explanation;
};

/// Right-angled Artin group G_Gamma: quasi-Kahler iff Gamma is complete
/// multipartite; Kahler iff Gamma = K_n with n even.
inline ClassificationVerdict classify_raag(const SimpleGraph& g) {
  ClassificationVerdict v;
  v.theorem = "raag-kahler-classification";
  auto parts = complete_multipartite(g);
  v.quasi_kahler = parts.has_value();
  if (parts) v.partition = *parts;
  else if (auto w = non_multipartite_witness(g)) v.violation = *w;
  v.kahler = g.is_complete() && g.vertices() % 2 == 0;
  if (v.kahler)
    v.explanation = "Gamma = K_" + std::to_string(g.vertices()) + " with even order: G_Gamma = Z^" +
                    std::to_string(g.vertices()) + " is the fundamental group of a complex torus";
  else if (v.quasi_kahler)
    v.explanation = "Gamma is complete multipartite: G_Gamma is a product of free groups";
  else
    v.explanation = "Gamma is not complete multipartite";
  return v;
}

/// Bestvina-Brady group N_Gamma of a connected graph: quasi-Kahler iff Gamma
/// is a tree, or K_{n_1..n_r} with some n_i = 1, or with all n_i >= 2 and
/// r >= 3; Kahler iff Gamma = K_n with n odd.
inline ClassificationVerdict classify_bb(const SimpleGraph& g) {
  require(g.vertices() >= 1 && g.connected(),
          "Bestvina-Brady classification needs a connected graph (otherwise N_Gamma is not finitely generated)");
  ClassificationVerdict v;
  v.theorem = "bb-kahler-classification";
  v.is_tree = g.is_tree();
  auto parts = complete_multipartite(g);
  if (parts) v.partition = *parts;
  else if (auto w = non_multipartite_witness(g)) v.violation = *w;
  bool multipartite_ok = false;
  if (parts) {
    const bool some_one = std::find(parts->begin(), parts->end(), 1u) != parts->end();
    const bool all_ge_two = std::all_of(parts->begin(), parts->end(), [](std::size_t p) { return p >= 2; });
    multipartite_ok = some_one || (all_ge_two && parts->size() >= 3);
  }
  v.quasi_kahler = v.is_tree || multipartite_ok;
  v.kahler = g.is_complete() && g.vertices() % 2 == 1;
  if (v.kahler)
    v.explanation = "Gamma = K_" + std::to_string(g.vertices()) + " with odd order: N_Gamma = Z^" +
                    std::to_string(g.vertices() - 1);
  else if (v.is_tree)
    v.explanation = "Gamma is a tree: N_Gamma is free";
  else if (multipartite_ok)
    v.explanation = "Gamma is complete multipartite with an allowed part structure";
  else if (parts)
    v.explanation = "Gamma is complete bipartite with both parts of size >= 2";
  else
    v.explanation = "Gamma is neither a tree nor complete multipartite";
  return v;
}

struct ArtinKernelVerdict {
  bool one_formal = false;
  std::optional<std::size_t> failing_degree;      // first i <= 1 with H~_i(flag; Q) != 0
  std::vector<AbelianGroup> integral_homology;    // H~_0, H~_1 over Z
  bool torsion_warning = false;                   // H~_1 rationally trivial but integrally not
  std::string presentation;                       // finite-presentation status, necessary conditions only
};

/// Artin kernel of the diagonal character: 1-formal when the flag complex has
/// H~_i(.; Q) = 0 for i <= 1.
inline ArtinKernelVerdict artin_kernel_formality(const SimpleGraph& g, std::size_t budget = default_face_budget) {
  require(g.vertices() >= 1 && g.connected(), "Artin kernel criterion needs a connected graph");
  ArtinKernelVerdict v;
  const SimplicialComplex flag = flag_complex(g, budget);
  v.integral_homology = simplicial_homology(flag, 1);
  for (std::size_t i = 0; i <= 1; ++i)
    if (v.integral_homology[i].free_rank != 0) {
      v.failing_degree = i;
      break;
    }
  v.one_formal = !v.failing_degree;
  v.torsion_warning = v.integral_homology[1].free_rank == 0 && !v.integral_homology[1].torsion.empty();
  if (!v.integral_homology[1].trivial())
    v.presentation = "not finitely presented (H_1 of the flag complex is nonzero, so it is not simply connected)";
  else
    v.presentation = "necessary-conditions-only: flag complex connected with H_1 = 0; simple connectivity not decided";
  return v;
}

/// Degree <= 2 cup data of G_Gamma: H^1 spanned by vertices, H^2 by edges
/// (lexicographic), mu(e_v ^ e_w) = +edge for v < w adjacent.
inline CupData raag_cup_data(const SimpleGraph& g) {
  const auto edges = g.edges();
  CupData c(g.vertices(), edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    RationalVector val(edges.size());
    val[k] = 1;
    c.set(edges[k].first, edges[k].second, std::move(val));
  }
  return c;
}

}  // namespace formality::graph
