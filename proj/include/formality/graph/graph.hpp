#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "formality/errors.hpp"

namespace formality::graph {

/// Finite simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit SimpleGraph(std::size_t n = 0) : n_(n), adj_(n, std::vector<bool>(n, false)) {}
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(std::size_t u, std::size_t v) {
    require(u < n_ && v < n_, "edge endpoint out of range");
    require(u != v, "loops are not allowed in a simple graph");
    require(!adj_[u][v], "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u][v] = adj_[v][u] = true;
  }

  std::size_t vertices() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }

  /// Edges {u, v} with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adj_[u][v]) out.emplace_back(u, v);
    return out;
  }
  std::size_t edge_count() const { return edges().size(); }

  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count(adj_[v].begin(), adj_[v].end(), true));
  }

  SimpleGraph complement() const {
    SimpleGraph c(n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (!adj_[u][v]) c.add_edge(u, v);
    return c;
  }

  SimpleGraph induced(const std::vector<std::size_t>& vs) const {
    SimpleGraph g(vs.size());
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (adj_[vs[a]][vs[b]]) g.add_edge(a, b);
    return g;
  }

  std::vector<std::vector<std::size_t>> components() const {
    std::vector<int> seen(n_, 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> comp{s}, stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n_; ++v)
          if (adj_[u][v] && !seen[v]) {
            seen[v] = 1;
            comp.push_back(v);
            stack.push_back(v);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool connected() const { return n_ <= 1 || components().size() == 1; }
  bool is_tree() const { return n_ >= 1 && connected() && edge_count() == n_ - 1; }
  bool is_complete() const { return edge_count() == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

  bool is_clique(const std::vector<std::size_t>& vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (!adj_[vs[a]][vs[b]]) return false;
    return true;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

  // Standard families.
  static SimpleGraph complete(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  static SimpleGraph path(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }
  static SimpleGraph cycle(std::size_t n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    SimpleGraph g = path(n);
    g.add_edge(0, n - 1);
    return g;
  }
  /// K_{n_1,...,n_r}: parts are independent sets, all cross edges present.
  static SimpleGraph complete_multipartite(const std::vector<std::size_t>& parts) {
    std::size_t n = 0;
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (std::size_t k = 0; k < parts[p]; ++k, ++n) part_of.push_back(p);
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<bool>> adj_;
};

}  // namespace formality::graph
