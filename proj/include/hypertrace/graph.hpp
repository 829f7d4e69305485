#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypertrace/errors.hpp"
#include "hypertrace/hypergraph.hpp"

namespace hypertrace {

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds from an edge list. Self-loops and out-of-range ids throw; repeated
  /// edges are merged and counted in *duplicates when given.
  static Graph from_edges(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> edges,
                          std::size_t* duplicates = nullptr) {
    Graph g(n);
    std::size_t dup = 0;
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw out_of_range_vertex("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" +
                                  std::to_string(n));
      if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      const auto last = std::unique(nb.begin(), nb.end());
      dup += static_cast<std::size_t>(nb.end() - last);
      nb.erase(last, nb.end());
    }
    if (duplicates) *duplicates = dup / 2;
    return g;
  }

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept {
    std::size_t s = 0;
    for (const auto& nb : adj_) s += nb.size();
    return s / 2;
  }
  std::span<const vertex_id> neighbors(vertex_id v) const { return adj_[v]; }
  std::size_t degree(vertex_id v) const { return adj_[v].size(); }
  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& nb : adj_) d = std::max(d, nb.size());
    return d;
  }
  bool adjacent(vertex_id u, vertex_id v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<vertex_id, vertex_id>> edge_list() const {
    std::vector<std::pair<vertex_id, vertex_id>> out;
    for (vertex_id u = 0; u < adj_.size(); ++u)
      for (vertex_id v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// N[v] when closed, N(v) otherwise; sorted.
  Edge neighborhood(vertex_id v, bool closed) const {
    Edge e = adj_[v];
    if (closed) e.insert(std::upper_bound(e.begin(), e.end(), v), v);
    return e;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<vertex_id>> adj_;
};

/// The hypergraph on V(G) whose edges are the n closed (or open)
/// neighborhoods, in vertex order. Repeated neighborhoods are kept.
inline Hypergraph neighborhood_hypergraph(const Graph& g, bool closed) {
  std::vector<Edge> edges;
  edges.reserve(g.num_vertices());
  for (vertex_id v = 0; v < g.num_vertices(); ++v) edges.push_back(g.neighborhood(v, closed));
  return Hypergraph(g.num_vertices(), std::move(edges), true);
}

/// First pair u < v (lexicographically) with N[u] = N[v] (closed) or N(u) = N(v) (open).
inline std::optional<std::pair<vertex_id, vertex_id>> find_twins(const Graph& g, bool closed) {
  std::map<Edge, vertex_id> first;
  std::optional<std::pair<vertex_id, vertex_id>> best;
  for (vertex_id v = 0; v < g.num_vertices(); ++v) {
    auto [it, inserted] = first.emplace(g.neighborhood(v, closed), v);
    if (!inserted) {
      std::pair<vertex_id, vertex_id> p{it->second, v};
      if (!best || p < *best) best = p;
    }
  }
  return best;
}

inline std::optional<vertex_id> find_isolated(const Graph& g) {
  for (vertex_id v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) return v;
  return std::nullopt;
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<vertex_id> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const vertex_id v = stack.back();
    stack.pop_back();
    for (vertex_id u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

inline bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

struct TreeStats {
  std::size_t n = 0;
  bool is_tree = false;
  std::vector<vertex_id> leaves;
  std::vector<vertex_id> supports;
  /// Leaves of the tree left after deleting every leaf. A single remaining
  /// vertex counts as a leaf; empty when n <= 2.
  std::vector<vertex_id> canonical_supports;

  std::size_t leaf_count() const noexcept { return leaves.size(); }
  std::size_t support_count() const noexcept { return supports.size(); }
  /// Every support vertex is adjacent to exactly one leaf.
  bool single_leaf_supports = false;
};

inline TreeStats tree_stats(const Graph& g) {
  TreeStats s;
  s.n = g.num_vertices();
  s.is_tree = is_tree(g);
  std::vector<char> leaf(s.n, 0);
  for (vertex_id v = 0; v < s.n; ++v)
    if (g.degree(v) == 1) {
      leaf[v] = 1;
      s.leaves.push_back(v);
    }
  s.single_leaf_supports = true;
  for (vertex_id v = 0; v < s.n; ++v) {
    const auto nb = g.neighbors(v);
    const auto leaf_nb = std::count_if(nb.begin(), nb.end(), [&](vertex_id u) { return leaf[u] != 0; });
    if (leaf_nb > 0) {
      s.supports.push_back(v);
      if (leaf_nb != 1) s.single_leaf_supports = false;
    }
  }
  if (s.is_tree && s.n > 2) {
    for (vertex_id v = 0; v < s.n; ++v) {
      if (leaf[v]) continue;
      const auto nb = g.neighbors(v);
      const auto inner = std::count_if(nb.begin(), nb.end(), [&](vertex_id u) { return leaf[u] == 0; });
      if (inner <= 1) s.canonical_supports.push_back(v);
    }
  }
  return s;
}

}  // namespace hypertrace
