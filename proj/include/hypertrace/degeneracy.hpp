#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypertrace/errors.hpp"
#include "hypertrace/hypergraph.hpp"

namespace hypertrace {

/// Vertex elimination order of a min-degree peel.
struct PeelResult {
  std::vector<vertex_id> order;
  /// degree_sequence[i] is the degree of order[i] when it was removed.
  std::vector<std::size_t> degree_sequence;
  std::size_t value = 0;
};

/// pseudo <= reduced <= classic. When the reduced value was not computed
/// exactly it is only known to lie in [reduced_lo, reduced_hi].
struct DegeneracyTriple {
  std::size_t pseudo = 0;
  std::size_t reduced_lo = 0;
  std::size_t reduced_hi = 0;
  std::size_t classic = 0;
  bool reduced_exact = false;

  std::optional<std::size_t> reduced() const {
    return reduced_exact ? std::optional<std::size_t>(reduced_lo) : std::nullopt;
  }
  /// Smallest value known to be at least the reduced degeneracy.
  std::size_t reduced_upper() const noexcept { return reduced_hi; }
};

inline constexpr std::size_t default_exact_limit = 18;
inline constexpr std::size_t oracle_vertex_cap = 22;

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Vertex -> edge incidence in compressed-row form.
struct Incidence {
  std::vector<std::size_t> offset;
  std::vector<std::uint32_t> edge;

  Incidence(std::size_t universe, const std::vector<Edge>& edges) : offset(universe + 1, 0) {
    for (const auto& e : edges)
      for (vertex_id v : e) ++offset[v + 1];
    for (std::size_t v = 0; v < universe; ++v) offset[v + 1] += offset[v];
    edge.resize(offset[universe]);
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (std::uint32_t i = 0; i < edges.size(); ++i)
      for (vertex_id v : edges[i]) edge[fill[v]++] = i;
  }

  std::span<const std::uint32_t> of(vertex_id v) const {
    return {edge.data() + offset[v], offset[v + 1] - offset[v]};
  }
  std::size_t degree(vertex_id v) const { return offset[v + 1] - offset[v]; }
};

using MinQueue = std::priority_queue<std::pair<std::size_t, vertex_id>, std::vector<std::pair<std::size_t, vertex_id>>,
                                     std::greater<>>;

/// Active vertices compacted to bit positions, edges as masks. At most 64 vertices.
struct MaskFamily {
  std::vector<vertex_id> vertices;
  std::vector<std::uint64_t> edges;  // distinct, nonempty

  explicit MaskFamily(const Hypergraph& h) : vertices(h.vertices().begin(), h.vertices().end()) {
    if (vertices.size() > 64) throw budget_exceeded("bit-mask enumeration on more than 64 vertices", vertices.size(), 64);
    std::vector<std::uint8_t> pos(h.universe(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<std::uint8_t>(i);
    for (const auto& e : h.edges()) {
      std::uint64_t m = 0;
      for (vertex_id v : e) m |= std::uint64_t{1} << pos[v];
      if (m) edges.push_back(m);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  std::uint64_t all() const noexcept {
    return vertices.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices.size()) - 1;
  }
};

/// Distinct nonempty traces of mask edges on s, written into out.
inline void mask_traces(std::span<const std::uint64_t> edges, std::uint64_t s, std::vector<std::uint64_t>& out) {
  out.clear();
  for (std::uint64_t e : edges)
    if (e & s) out.push_back(e & s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

/// Pseudo-degeneracy of a small hypergraph given by distinct nonempty edge
/// masks over the vertex mask verts, by the same min-degree peel as
/// peel_pseudo_degeneracy.
inline std::size_t mask_pseudo_degeneracy(std::span<const std::uint64_t> edges, std::uint64_t verts) {
  std::array<std::uint32_t, 64> deg{};
  std::vector<char> alive(edges.size(), 1);
  for (std::uint64_t e : edges)
    for (std::uint64_t m = e; m; m &= m - 1) ++deg[std::countr_zero(m)];
  std::size_t best = 0;
  while (verts) {
    int pick = -1;
    std::uint32_t low = 0;
    for (std::uint64_t m = verts; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (pick < 0 || deg[v] < low) {
        pick = v;
        low = deg[v];
      }
    }
    best = std::max<std::size_t>(best, low);
    const std::uint64_t bit = std::uint64_t{1} << pick;
    verts &= ~bit;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i] || !(edges[i] & bit)) continue;
      alive[i] = 0;
      for (std::uint64_t m = edges[i]; m; m &= m - 1) --deg[std::countr_zero(m)];
    }
  }
  return best;
}

}  // namespace detail

/// Degeneracy by peeling a minimum-degree vertex from the induced
/// subhypergraph H[V_i] at every step. Edges whose traces coincide after a
/// removal are merged, so degrees always count distinct nonempty traces.
/// Ties go to the lowest vertex id.
inline PeelResult peel_degeneracy(const Hypergraph& h) {
  PeelResult r;
  const std::size_t n = h.universe();
  std::vector<Edge> cls = h.distinct_edges(true);
  const detail::Incidence inc(n, cls);
  const std::size_t c = cls.size();

  std::vector<std::uint64_t> hash(c, 0);
  std::vector<std::uint32_t> size(c);
  std::vector<char> alive(c, 1);
  std::unordered_multimap<std::uint64_t, std::uint32_t> buckets;
  buckets.reserve(c);
  for (std::uint32_t i = 0; i < c; ++i) {
    for (vertex_id v : cls[i]) hash[i] ^= detail::splitmix64(v);
    size[i] = static_cast<std::uint32_t>(cls[i].size());
    buckets.emplace(hash[i], i);
  }

  std::vector<char> removed(n, 0);
  std::vector<std::size_t> deg(n, 0);
  detail::MinQueue queue;
  for (vertex_id v : h.vertices()) {
    deg[v] = inc.degree(v);
    queue.emplace(deg[v], v);
  }

  auto compact = [&](std::uint32_t i) {
    auto& e = cls[i];
    e.erase(std::remove_if(e.begin(), e.end(), [&](vertex_id u) { return removed[u] != 0; }), e.end());
  };
  auto unlink = [&](std::uint32_t i) {
    auto [lo, hi] = buckets.equal_range(hash[i]);
    for (auto it = lo; it != hi; ++it)
      if (it->second == i) {
        buckets.erase(it);
        return;
      }
  };

  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (removed[v] || d != deg[v]) continue;
    r.order.push_back(v);
    r.degree_sequence.push_back(d);
    r.value = std::max(r.value, d);
    removed[v] = 1;

    for (std::uint32_t i : inc.of(v)) {
      if (!alive[i]) continue;
      unlink(i);
      hash[i] ^= detail::splitmix64(v);
      if (--size[i] == 0) {
        alive[i] = 0;
        continue;
      }
      compact(i);
      std::optional<std::uint32_t> twin;
      auto [lo, hi] = buckets.equal_range(hash[i]);
      for (auto it = lo; it != hi && !twin; ++it) {
        const std::uint32_t j = it->second;
        if (!alive[j] || size[j] != size[i]) continue;
        compact(j);
        if (cls[j] == cls[i]) twin = j;
      }
      if (twin) {
        // Two traces became equal: every vertex of the merged trace loses one.
        alive[i] = 0;
        for (vertex_id u : cls[i]) queue.emplace(--deg[u], u);
      } else {
        buckets.emplace(hash[i], i);
      }
    }
  }
  return r;
}

/// Pseudo degeneracy by peeling a minimum-degree vertex together with every
/// edge that contains it. Repeated edges are counted once. Ties go to the
/// lowest vertex id.
inline PeelResult peel_pseudo_degeneracy(const Hypergraph& h) {
  PeelResult r;
  const std::size_t n = h.universe();
  const std::vector<Edge> edges = h.distinct_edges(true);
  const detail::Incidence inc(n, edges);

  std::vector<char> edge_alive(edges.size(), 1);
  std::vector<char> removed(n, 0);
  std::vector<std::size_t> deg(n, 0);
  detail::MinQueue queue;
  for (vertex_id v : h.vertices()) {
    deg[v] = inc.degree(v);
    queue.emplace(deg[v], v);
  }
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (removed[v] || d != deg[v]) continue;
    r.order.push_back(v);
    r.degree_sequence.push_back(d);
    r.value = std::max(r.value, d);
    removed[v] = 1;
    for (std::uint32_t i : inc.of(v)) {
      if (!edge_alive[i]) continue;
      edge_alive[i] = 0;
      for (vertex_id u : edges[i])
        if (!removed[u]) queue.emplace(--deg[u], u);
    }
  }
  return r;
}

/// Largest minimum degree over all induced subhypergraphs H[S], by direct
/// enumeration of S. Independent of the peel; exponential in |V|.
inline std::size_t degeneracy_oracle(const Hypergraph& h) {
  if (h.num_vertices() > oracle_vertex_cap)
    throw budget_exceeded("degeneracy oracle", std::uint64_t{1} << std::min<std::size_t>(h.num_vertices(), 63),
                          std::uint64_t{1} << oracle_vertex_cap);
  const detail::MaskFamily f(h);
  std::vector<std::uint64_t> traces;
  std::size_t best = 0;
  for (std::uint64_t s = 1; s <= f.all() && s != 0; ++s) {
    detail::mask_traces(f.edges, s, traces);
    std::size_t low = SIZE_MAX;
    for (std::uint64_t m = s; m && low > best; m &= m - 1) {
      const std::uint64_t bit = m & -m;
      low = std::min<std::size_t>(
          low, static_cast<std::size_t>(std::count_if(traces.begin(), traces.end(), [&](std::uint64_t t) { return (t & bit) != 0; })));
    }
    best = std::max(best, low);
  }
  return best;
}

/// Largest minimum degree over all pseudo induced subhypergraphs, by direct
/// enumeration. Repeated edges count once.
inline std::size_t pseudo_degeneracy_oracle(const Hypergraph& h) {
  if (h.num_vertices() > oracle_vertex_cap)
    throw budget_exceeded("pseudo degeneracy oracle", std::uint64_t{1} << std::min<std::size_t>(h.num_vertices(), 63),
                          std::uint64_t{1} << oracle_vertex_cap);
  const detail::MaskFamily f(h);
  std::size_t best = 0;
  for (std::uint64_t s = 1; s <= f.all() && s != 0; ++s) {
    std::size_t low = SIZE_MAX;
    for (std::uint64_t m = s; m && low > best; m &= m - 1) {
      const std::uint64_t bit = m & -m;
      low = std::min<std::size_t>(low, static_cast<std::size_t>(std::count_if(f.edges.begin(), f.edges.end(), [&](std::uint64_t e) {
                                    return (e & bit) != 0 && (e & ~s) == 0;
                                  })));
    }
    best = std::max(best, low);
  }
  return best;
}

/// The three degeneracy values. The reduced degeneracy (largest pseudo
/// degeneracy of any H[S]) is enumerated over all S when the vertex count is at
/// most exact_limit; otherwise only the interval [pseudo, classic] is reported.
inline DegeneracyTriple reduced_degeneracy(const Hypergraph& h, std::size_t exact_limit = default_exact_limit) {
  DegeneracyTriple t;
  t.pseudo = peel_pseudo_degeneracy(h).value;
  t.classic = peel_degeneracy(h).value;
  t.reduced_lo = t.pseudo;
  t.reduced_hi = t.classic;
  if (h.num_vertices() > std::min<std::size_t>(exact_limit, 40)) return t;

  const detail::MaskFamily f(h);
  std::vector<std::uint64_t> traces;
  std::size_t best = t.pseudo;
  for (std::uint64_t s = 1; s <= f.all() && s != 0 && best < t.classic; ++s) {
    detail::mask_traces(f.edges, s, traces);
    if (traces.size() <= best) continue;  // min degree never exceeds the edge count
    best = std::max(best, detail::mask_pseudo_degeneracy(traces, s));
  }
  t.reduced_lo = t.reduced_hi = best;
  t.reduced_exact = true;
  return t;
}

}  // namespace hypertrace
