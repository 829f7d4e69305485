#pragma once

#include <random>
#include <utility>
#include <vector>

#include "hypertrace/hypertrace.hpp"

namespace fx {

using namespace hypertrace;

inline Hypergraph tri() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}, false); }

inline Graph graph(std::size_t n, std::vector<std::pair<vertex_id, vertex_id>> e) { return Graph::from_edges(n, e); }
inline Graph path(std::size_t n) {
  std::vector<std::pair<vertex_id, vertex_id>> e;
  for (vertex_id i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}
inline Graph star(std::size_t leaves) {
  std::vector<std::pair<vertex_id, vertex_id>> e;
  for (vertex_id i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

inline std::vector<vertex_id> subset_of(std::span<const vertex_id> verts, std::uint64_t mask) {
  std::vector<vertex_id> s;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (mask >> i & 1) s.push_back(verts[i]);
  return s;
}

/// Random hypergraph with n in [1, max_n] and up to max_m edges; small edges are favoured.
inline Hypergraph random_small(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m, bool simple = true) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(edge_capacity(n, n), max_m));
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
  const std::size_t max_edge = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  const std::size_t m2 = std::min<std::size_t>(m, edge_capacity(n, max_edge));
  return random_hypergraph(n, m2, max_edge, rng(), simple);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
  const double p = std::uniform_real_distribution<double>(0.15, 0.7)(rng);
  return random_gnp(n, p, rng());
}

}  // namespace fx
