#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "hypertrace/errors.hpp"

namespace hypertrace {

using vertex_id = std::uint32_t;

/// A sorted, duplicate-free list of vertex ids.
using Edge = std::vector<vertex_id>;

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ e.size();
    for (vertex_id v : e) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using EdgeSet = std::unordered_set<Edge, EdgeHash>;

inline Edge normalized(Edge e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

/// Set system over a subset of the vertex ids [0, universe).
///
/// Vertex ids are never relabelled: a restriction to S keeps the ids of S, so
/// results of nested operations can be compared directly. Values are immutable
/// after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Hypergraph whose vertex set is all of [0, n).
  Hypergraph(std::size_t n, std::vector<Edge> edges, bool allow_multi)
      : Hypergraph(n, iota_vertices(n), std::move(edges), allow_multi) {}

  /// Hypergraph on an explicit vertex subset of [0, universe). Throws
  /// out_of_range_vertex if an edge leaves the vertex set and undefined_quantity
  /// if repeated edges are given while allow_multi is false.
  Hypergraph(std::size_t universe, std::vector<vertex_id> vertices, std::vector<Edge> edges,
             bool allow_multi)
      : universe_(universe),
        vertices_(normalized(std::move(vertices))),
        active_(universe, 0),
        edges_(std::move(edges)),
        allow_multi_(allow_multi) {
    if (universe > std::numeric_limits<vertex_id>::max())
      throw out_of_range_vertex("vertex count exceeds the id range");
    for (vertex_id v : vertices_) {
      if (v >= universe) throw out_of_range_vertex("vertex " + std::to_string(v) + " >= " + std::to_string(universe));
      active_[v] = 1;
    }
    EdgeSet seen;
    for (auto& e : edges_) {
      e = normalized(std::move(e));
      for (vertex_id v : e) {
        if (v >= universe_ || !active_[v])
          throw out_of_range_vertex("edge references vertex " + std::to_string(v) + " outside the vertex set");
      }
      incidence_ += e.size();
      if (!seen.insert(e).second) repeated_ = true;
    }
    if (repeated_ && !allow_multi_) throw undefined_quantity("repeated edge in a hypergraph without allow_multi");
  }

  std::size_t universe() const noexcept { return universe_; }
  std::span<const vertex_id> vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  bool contains(vertex_id v) const noexcept { return v < universe_ && active_[v]; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  /// Sum of edge sizes.
  std::size_t incidence_size() const noexcept { return incidence_; }

  bool allow_multi() const noexcept { return allow_multi_; }
  bool has_repeated_edges() const noexcept { return repeated_; }
  bool has_empty_edge() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.empty(); });
  }

  /// Edges with repetitions removed, in first-occurrence order.
  std::vector<Edge> distinct_edges(bool drop_empty = true) const {
    std::vector<Edge> out;
    EdgeSet seen;
    for (const auto& e : edges_) {
      if (drop_empty && e.empty()) continue;
      if (seen.insert(e).second) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.universe_ == b.universe_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.allow_multi_ == b.allow_multi_;
  }

  /// Same vertex set and same family of distinct edges, ignoring order and repetition.
  friend bool same_edge_set(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertices_ != b.vertices_) return false;
    auto ea = a.distinct_edges(false);
    auto eb = b.distinct_edges(false);
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
  }

 private:
  static std::vector<vertex_id> iota_vertices(std::size_t n) {
    std::vector<vertex_id> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<vertex_id>(i);
    return v;
  }

  std::size_t universe_ = 0;
  std::vector<vertex_id> vertices_;
  std::vector<char> active_;
  std::vector<Edge> edges_;
  std::size_t incidence_ = 0;
  bool allow_multi_ = false;
  bool repeated_ = false;
};

struct BuildResult {
  Hypergraph hypergraph;
  /// Number of repeated edges removed (always 0 when allow_multi is set).
  std::size_t collapsed = 0;
};

/// Validates and normalizes an edge list over [0, n). Repeated edges are
/// collapsed unless allow_multi is set.
inline BuildResult build_hypergraph(std::size_t n, std::vector<Edge> edges, bool allow_multi) {
  std::size_t collapsed = 0;
  for (auto& e : edges) {
    for (vertex_id v : e)
      if (v >= n) throw out_of_range_vertex("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    e = normalized(std::move(e));
  }
  if (!allow_multi) {
    EdgeSet seen;
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (auto& e : edges) {
      if (seen.insert(e).second)
        kept.push_back(std::move(e));
      else
        ++collapsed;
    }
    edges = std::move(kept);
  }
  return {Hypergraph(n, std::move(edges), allow_multi), collapsed};
}

namespace detail {

inline std::vector<vertex_id> checked_subset(const Hypergraph& h, std::span<const vertex_id> s) {
  std::vector<vertex_id> out(s.begin(), s.end());
  out = normalized(std::move(out));
  for (vertex_id v : out)
    if (!h.contains(v)) throw out_of_range_vertex("vertex " + std::to_string(v) + " is not in the hypergraph");
  return out;
}

inline std::vector<char> membership(std::size_t universe, std::span<const vertex_id> s) {
  std::vector<char> in(universe, 0);
  for (vertex_id v : s) in[v] = 1;
  return in;
}

inline Edge trace_of(const Edge& e, const std::vector<char>& in_s) {
  Edge t;
  for (vertex_id v : e)
    if (in_s[v]) t.push_back(v);
  return t;
}

}  // namespace detail

/// H[S]: the hypergraph on S whose edges are the distinct nonempty traces e ∩ S.
inline Hypergraph restriction(const Hypergraph& h, std::span<const vertex_id> s) {
  auto base = detail::checked_subset(h, s);
  const auto in_s = detail::membership(h.universe(), base);
  std::vector<Edge> traces;
  EdgeSet seen;
  for (const auto& e : h.edges()) {
    Edge t = detail::trace_of(e, in_s);
    if (!t.empty() && seen.insert(t).second) traces.push_back(std::move(t));
  }
  return Hypergraph(h.universe(), std::move(base), std::move(traces), false);
}

/// The hypergraph on S keeping exactly the original edges contained in S.
inline Hypergraph pseudo_induced(const Hypergraph& h, std::span<const vertex_id> s) {
  auto base = detail::checked_subset(h, s);
  const auto in_s = detail::membership(h.universe(), base);
  std::vector<Edge> kept;
  for (const auto& e : h.edges())
    if (std::all_of(e.begin(), e.end(), [&](vertex_id v) { return in_s[v] != 0; })) kept.push_back(e);
  return Hypergraph(h.universe(), std::move(base), std::move(kept), h.allow_multi());
}

struct TraceFamily {
  std::vector<vertex_id> base;
  /// Distinct traces, sorted lexicographically.
  std::vector<Edge> traces;
  std::size_t count = 0;
};

inline TraceFamily trace_family(const Hypergraph& h, std::span<const vertex_id> s, bool include_empty = false) {
  TraceFamily tf;
  tf.base = detail::checked_subset(h, s);
  const auto in_s = detail::membership(h.universe(), tf.base);
  EdgeSet seen;
  for (const auto& e : h.edges()) {
    Edge t = detail::trace_of(e, in_s);
    if (t.empty() && !include_empty) continue;
    if (seen.insert(t).second) tf.traces.push_back(std::move(t));
  }
  std::sort(tf.traces.begin(), tf.traces.end());
  tf.count = tf.traces.size();
  return tf;
}

struct DegreeProfile {
  /// Indexed by vertex id over the whole universe; inactive ids hold 0.
  std::vector<std::size_t> degrees;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

/// Edge-membership counts; repeated edges count once per occurrence.
inline DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees.assign(h.universe(), 0);
  for (const auto& e : h.edges())
    for (vertex_id v : e) ++p.degrees[v];
  if (h.num_vertices() > 0) {
    p.min_degree = std::numeric_limits<std::size_t>::max();
    for (vertex_id v : h.vertices()) {
      p.min_degree = std::min(p.min_degree, p.degrees[v]);
      p.max_degree = std::max(p.max_degree, p.degrees[v]);
    }
  }
  return p;
}

/// Hypergraph with each edge kept once, as the degeneracy definitions assume.
inline Hypergraph simple_copy(const Hypergraph& h) {
  std::vector<vertex_id> verts(h.vertices().begin(), h.vertices().end());
  return Hypergraph(h.universe(), std::move(verts), h.distinct_edges(false), false);
}

}  // namespace hypertrace
