#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypertrace/combinatorics.hpp"
#include "hypertrace/degeneracy.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/graph.hpp"
#include "hypertrace/hypergraph.hpp"
#include "hypertrace/trace_keys.hpp"

namespace hypertrace {

struct VcResult {
  std::size_t dimension = 0;
  /// Lexicographically first shattered set of size dimension.
  std::vector<vertex_id> witness;
  /// Largest set size the search was allowed to consider.
  std::size_t upper_bound_used = 0;
  std::uint64_t nodes_enumerated = 0;
};

inline constexpr std::size_t max_shatter_size = 30;

/// True iff every subset of S, the empty set included, equals e ∩ S for some edge e.
inline bool is_shattered(const Hypergraph& h, std::span<const vertex_id> s) {
  if (s.size() > max_shatter_size) throw invalid_input("shattering test limited to 30 vertices");
  for (vertex_id v : s)
    if (!h.contains(v)) throw out_of_range_vertex("vertex " + std::to_string(v) + " is not in the hypergraph");
  if (h.num_edges() < (std::size_t{1} << s.size())) return false;
  const TraceKeyer keyer(h);
  std::vector<std::uint64_t> keys;
  keyer.keys(s, keys);
  return count_distinct_keys(keys, true) == (std::size_t{1} << s.size());
}

/// floor(log2(degeneracy)) + 1, or 0 when the degeneracy is 0.
constexpr std::size_t vc_upper_bound(std::size_t classic_degeneracy) noexcept {
  return static_cast<std::size_t>(std::bit_width(classic_degeneracy));
}

inline std::size_t vc_upper_bound(const Hypergraph& h) { return vc_upper_bound(peel_degeneracy(h).value); }

/// Exact VC dimension. Only sizes up to vc_upper_bound are searched, in
/// ascending order, stopping at the first size with no shattered set. A
/// vertex of a shattered s-set lies in at least 2^(s-1) distinct edges, which
/// filters the candidates at each size.
inline VcResult vc_exact(const Hypergraph& h, Budget budget = {}) {
  VcResult r;
  if (h.num_edges() == 0) return r;
  r.upper_bound_used = vc_upper_bound(h);

  std::vector<std::size_t> distinct_degree(h.universe(), 0);
  for (const auto& e : h.distinct_edges(true))
    for (vertex_id v : e) ++distinct_degree[v];

  std::vector<std::vector<vertex_id>> candidates(r.upper_bound_used + 1);
  std::uint64_t planned = 0;
  for (std::size_t s = 1; s <= r.upper_bound_used; ++s) {
    for (vertex_id v : h.vertices())
      if (distinct_degree[v] >= (std::size_t{1} << (s - 1))) candidates[s].push_back(v);
    planned = saturating_add(planned, binomial(candidates[s].size(), s));
  }
  if (planned > budget.subsets) throw budget_exceeded("vc enumeration", planned, budget.subsets);

  const TraceKeyer keyer(h);
  std::vector<std::uint64_t> keys;
  std::vector<vertex_id> s;
  for (std::size_t size = 1; size <= r.upper_bound_used; ++size) {
    const auto& cand = candidates[size];
    if (h.num_edges() < (std::size_t{1} << size)) break;
    bool found = false;
    s.resize(size);
    for (Combinations c(cand.size(), size); !c.done() && !found; c.next()) {
      ++r.nodes_enumerated;
      const auto idx = c.current();
      for (std::size_t i = 0; i < size; ++i) s[i] = cand[idx[i]];
      keyer.keys(s, keys);
      if (count_distinct_keys(keys, true) == (std::size_t{1} << size)) {
        found = true;
        r.dimension = size;
        r.witness = s;
      }
    }
    if (!found) break;
  }
  return r;
}

namespace detail {

/// Shattering of S in the closed-neighborhood hypergraph of g, looking only at
/// N[u] for u in N[S]; the empty trace exists iff N[S] misses a vertex.
inline bool neighborhood_shatters(const Graph& g, std::span<const vertex_id> s, std::vector<vertex_id>& scratch,
                                  std::vector<std::uint64_t>& keys) {
  scratch.clear();
  for (vertex_id x : s) {
    scratch.push_back(x);
    for (vertex_id u : g.neighbors(x)) scratch.push_back(u);
  }
  std::sort(scratch.begin(), scratch.end());
  scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
  keys.clear();
  for (vertex_id u : scratch) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (u == s[i] || g.adjacent(u, s[i])) k |= std::uint64_t{1} << i;
    keys.push_back(k);
  }
  if (scratch.size() < g.num_vertices()) keys.push_back(0);
  return count_distinct_keys(keys, true) == (std::size_t{1} << s.size());
}

}  // namespace detail

/// VC dimension of the closed-neighborhood hypergraph of g. A nonempty
/// shattered set is itself a trace, so it lies inside some N[v]; only subsets
/// of the closed neighborhoods are searched.
inline VcResult vc_neighborhood_exact(const Graph& g, Budget budget = {}) {
  VcResult r;
  const std::size_t n = g.num_vertices();
  if (n == 0) return r;
  r.upper_bound_used = vc_upper_bound(neighborhood_hypergraph(g, true));

  std::uint64_t planned = 0;
  for (vertex_id v = 0; v < n; ++v)
    for (std::size_t s = 1; s <= r.upper_bound_used; ++s)
      planned = saturating_add(planned, binomial(g.degree(v) + 1, s));
  if (planned > budget.subsets) throw budget_exceeded("neighborhood vc enumeration", planned, budget.subsets);

  std::vector<vertex_id> scratch, s;
  std::vector<std::uint64_t> keys;
  for (std::size_t size = 1; size <= r.upper_bound_used; ++size) {
    if (n < (std::size_t{1} << size)) break;
    std::optional<std::vector<vertex_id>> best;
    s.resize(size);
    for (vertex_id v = 0; v < n; ++v) {
      Edge cand;
      for (vertex_id u : g.neighborhood(v, true))
        if (g.degree(u) + 1 >= (std::size_t{1} << (size - 1))) cand.push_back(u);
      for (Combinations c(cand.size(), size); !c.done(); c.next()) {
        const auto idx = c.current();
        for (std::size_t i = 0; i < size; ++i) s[i] = cand[idx[i]];
        if (best && !(s < *best)) break;  // later combinations from this v are larger still
        ++r.nodes_enumerated;
        if (detail::neighborhood_shatters(g, s, scratch, keys)) {
          best = s;
          break;
        }
      }
    }
    if (!best) break;
    r.dimension = size;
    r.witness = *best;
  }
  return r;
}

}  // namespace hypertrace
