#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypertrace/combinatorics.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/graph.hpp"
#include "hypertrace/hypergraph.hpp"

namespace hypertrace {

/// Uniformly random labelled tree on n vertices from a random Prüfer sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw invalid_input("a tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<vertex_id, vertex_id>> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::uniform_int_distribution<vertex_id> pick(0, static_cast<vertex_id>(n - 1));
    std::vector<vertex_id> code(n - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (vertex_id c : code) ++degree[c];
    std::priority_queue<vertex_id, std::vector<vertex_id>, std::greater<>> leaves;
    for (vertex_id v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (vertex_id c : code) {
      const vertex_id leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(leaf, c);
      if (--degree[c] == 1) leaves.push(c);
    }
    const vertex_id a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
  }
  return Graph::from_edges(n, edges);
}

/// Erdős–Rényi G(n, p).
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw invalid_input("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<vertex_id, vertex_id>> edges;
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Number of distinct nonempty edges of size at most max_edge on n vertices (saturating).
constexpr std::uint64_t edge_capacity(std::size_t n, std::size_t max_edge) noexcept {
  std::uint64_t c = 0;
  for (std::size_t s = 1; s <= std::min(n, max_edge); ++s) c = saturating_add(c, binomial(n, s));
  return c;
}

/// m independent edges: size uniform in [1, max_edge], members uniform without
/// replacement. When simple, repeated edges are redrawn.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_edge, std::uint64_t seed,
                                    bool simple = true) {
  if (m > 0 && (n == 0 || max_edge == 0)) throw invalid_input("edges need at least one vertex and max_edge >= 1");
  max_edge = std::min(max_edge, n);
  const std::uint64_t capacity = edge_capacity(n, max_edge);
  if (simple && m > capacity)
    throw invalid_input("only " + std::to_string(capacity) + " distinct nonempty edges of size <= " +
                        std::to_string(max_edge) + " exist on " + std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);

  if (simple && n <= 24 && 2 * m > capacity) {
    // Dense request: sample from the explicit list of candidates.
    std::vector<std::uint32_t> all;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask)
      if (static_cast<std::size_t>(std::popcount(mask)) <= max_edge) all.push_back(mask);
    std::shuffle(all.begin(), all.end(), rng);
    for (std::size_t i = 0; i < m; ++i) {
      Edge e;
      for (std::uint32_t x = all[i]; x; x &= x - 1) e.push_back(static_cast<vertex_id>(std::countr_zero(x)));
      edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges), false);
  }

  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(max_edge, 1));
  std::uniform_int_distribution<vertex_id> vertex_dist(0, n == 0 ? 0 : static_cast<vertex_id>(n - 1));
  EdgeSet seen;
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(m) + 100000;
  while (edges.size() < m) {
    if (++attempts > max_attempts) throw invalid_input("could not draw enough distinct edges; lower m");
    const std::size_t k = size_dist(rng);
    Edge e;
    e.reserve(k);
    std::unordered_set<vertex_id> members;
    while (members.size() < k) members.insert(vertex_dist(rng));
    e.assign(members.begin(), members.end());
    std::sort(e.begin(), e.end());
    if (simple && !seen.insert(e).second) continue;
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges), !simple);
}

}  // namespace hypertrace
