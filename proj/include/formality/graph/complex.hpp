#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "formality/graph/graph.hpp"

namespace formality::graph {

using Face = std::vector<std::size_t>;  // sorted vertex list

inline constexpr std::size_t default_face_budget = 100000;

/// Abstract simplicial complex on vertices 0..n-1, stored as its full,
/// downward-closed face set (nonempty faces only), grouped by dimension.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of the given facets. Every vertex 0..n-1 is included as a face.
  static SimplicialComplex from_facets(std::size_t n, const std::vector<Face>& facets,
                                       std::size_t budget = default_face_budget) {
    std::set<Face> all;
    for (std::size_t v = 0; v < n; ++v) all.insert(Face{v});
    for (Face f : facets) {
      std::sort(f.begin(), f.end());
      require(std::adjacent_find(f.begin(), f.end()) == f.end(), "facet has a repeated vertex");
      require(!f.empty(), "empty facet");
      require(f.back() < n, "facet vertex out of range");
      require(f.size() < 31, "facet too large");
      if (all.count(f)) continue;
      const std::uint32_t count = 1u << f.size();
      for (std::uint32_t mask = 1; mask < count; ++mask) {
        Face sub;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (mask >> i & 1u) sub.push_back(f[i]);
        all.insert(std::move(sub));
        if (all.size() > budget) throw BudgetExceeded("simplicial complex exceeds the face budget");
      }
    }
    SimplicialComplex K;
    K.n_ = n;
    for (auto& f : all) {
      const std::size_t d = f.size() - 1;
      if (K.faces_.size() <= d) K.faces_.resize(d + 1);
      K.faces_[d].push_back(f);
    }
    for (auto& layer : K.faces_) std::sort(layer.begin(), layer.end());
    return K;
  }

  std::size_t vertices() const { return n_; }
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Face>& faces(std::size_t d) const {
    static const std::vector<Face> none;
    return d < faces_.size() ? faces_[d] : none;
  }
  std::size_t count(std::size_t d) const { return faces(d).size(); }
  std::size_t total_faces() const {
    std::size_t t = 0;
    for (const auto& l : faces_) t += l.size();
    return t;
  }

  bool contains(const Face& f) const {
    const auto& layer = faces(f.size() - 1);
    return std::binary_search(layer.begin(), layer.end(), f);
  }

  std::size_t index_of(const Face& f) const {
    const auto& layer = faces(f.size() - 1);
    auto it = std::lower_bound(layer.begin(), layer.end(), f);
    require(it != layer.end() && *it == f, "face not in complex");
    return static_cast<std::size_t>(it - layer.begin());
  }

  /// Faces not contained in any larger face.
  std::vector<Face> facets() const {
    std::vector<Face> out;
    for (std::size_t d = 0; d < faces_.size(); ++d)
      for (const auto& f : faces_[d]) {
        bool maximal = true;
        if (d + 1 < faces_.size())
          for (const auto& g : faces_[d + 1])
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
              maximal = false;
              break;
            }
        if (maximal) out.push_back(f);
      }
    return out;
  }

  SimpleGraph one_skeleton() const {
    SimpleGraph g(n_);
    for (const auto& e : faces(1)) g.add_edge(e[0], e[1]);
    return g;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Face>> faces_;
};

namespace detail {

// Bron-Kerbosch with pivoting; reports maximal cliques.
inline void bron_kerbosch(const SimpleGraph& g, std::vector<std::size_t>& R, std::vector<std::size_t> P,
                          std::vector<std::size_t> X, std::vector<Face>& out, std::size_t budget) {
  if (P.empty() && X.empty()) {
    Face f = R;
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
    if (out.size() > budget) throw BudgetExceeded("clique enumeration exceeds the face budget");
    return;
  }
  std::size_t pivot = P.empty() ? X.front() : P.front();
  std::size_t best = 0;
  for (const auto* set : {&P, &X})
    for (auto u : *set) {
      std::size_t cnt = 0;
      for (auto v : P) cnt += g.adjacent(u, v);
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  std::vector<std::size_t> candidates;
  for (auto v : P)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (auto v : candidates) {
    std::vector<std::size_t> P2, X2;
    for (auto u : P)
      if (g.adjacent(v, u)) P2.push_back(u);
    for (auto u : X)
      if (g.adjacent(v, u)) X2.push_back(u);
    R.push_back(v);
    bron_kerbosch(g, R, std::move(P2), std::move(X2), out, budget);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

}  // namespace detail

/// Maximal cliques of g, each sorted, in lexicographic order.
inline std::vector<Face> maximal_cliques(const SimpleGraph& g, std::size_t budget = default_face_budget) {
  std::vector<Face> out;
  std::vector<std::size_t> R, P(g.vertices());
  for (std::size_t v = 0; v < g.vertices(); ++v) P[v] = v;
  if (g.vertices() > 0) detail::bron_kerbosch(g, R, P, {}, out, budget);
  std::sort(out.begin(), out.end());
  return out;
}

/// Flag complex: the faces are exactly the cliques of g.
inline SimplicialComplex flag_complex(const SimpleGraph& g, std::size_t budget = default_face_budget) {
  return SimplicialComplex::from_facets(g.vertices(), maximal_cliques(g, budget), budget);
}

inline bool is_flag(const SimplicialComplex& K) {
  return flag_complex(K.one_skeleton()) == K;
}

/// Barycentric subdivision: vertices are the faces of K (ordered by dimension,
/// then lexicographically), simplices are chains under inclusion.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& K, std::size_t budget = default_face_budget) {
  std::map<Face, std::size_t> id;
  for (int d = 0; d <= K.dimension(); ++d)
    for (const auto& f : K.faces(static_cast<std::size_t>(d))) id.emplace(f, id.size());
  std::vector<Face> facets;
  for (const auto& top : K.facets()) {
    Face order = top;
    do {
      Face chain;
      Face prefix;
      for (auto v : order) {
        prefix.push_back(v);
        Face s = prefix;
        std::sort(s.begin(), s.end());
        chain.push_back(id.at(s));
      }
      std::sort(chain.begin(), chain.end());
      facets.push_back(std::move(chain));
      if (facets.size() > budget) throw BudgetExceeded("barycentric subdivision exceeds the face budget");
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::from_facets(id.size(), facets, budget);
}

/// The six-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2_six_vertex() {
  return SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

/// Boundary of the n-simplex (a triangulated (n-1)-sphere).
inline SimplicialComplex simplex_boundary(std::size_t n) {
  std::vector<Face> facets;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Face f;
    for (std::size_t v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(n + 1, facets);
}

}  // namespace formality::graph
