#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypertrace/combinatorics.hpp"
#include "hypertrace/degeneracy.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/hypergraph.hpp"
#include "hypertrace/trace_function.hpp"
#include "hypertrace/trace_keys.hpp"

namespace hypertrace {

enum class BoundForm { exact_trace, power_of_two };

inline const char* to_string(BoundForm f) { return f == BoundForm::exact_trace ? "exact-T" : "power-of-two"; }

struct DtBound {
  std::size_t j = 0;
  Fraction value;
  BoundForm form = BoundForm::exact_trace;
  /// Denominator used; an upper estimate of the reduced degeneracy.
  std::size_t delta_used = 0;
  /// The classic degeneracy stood in for an unknown reduced degeneracy.
  bool safe_weakened = false;
};

struct DtLowerBounds {
  std::vector<DtBound> entries;
  /// Ceiling of the largest entry; a certified lower bound on dt(H).
  std::int64_t certified = 0;
};

struct DtResult {
  std::size_t value = 0;
  std::vector<vertex_id> witness;
  std::uint64_t subsets_examined = 0;
};

namespace detail {

inline void require_simple(const Hypergraph& h, const char* what) {
  if (h.has_repeated_edges())
    throw undefined_quantity(std::string(what) + " is undefined for hypergraphs with repeated edges");
}

inline bool distinct_nonempty(std::vector<std::uint64_t>& keys) {
  std::sort(keys.begin(), keys.end());
  if (!keys.empty() && keys.front() == 0) return false;
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace detail

/// S meets every edge and no two edges have the same trace on S.
inline bool is_distinguishing_transversal(const Hypergraph& h, std::span<const vertex_id> s) {
  detail::require_simple(h, "a distinguishing transversal");
  const auto base = detail::checked_subset(h, s);
  if (base.size() <= 64 || h.num_vertices() <= 64) {
    const TraceKeyer keyer(h);
    std::vector<std::uint64_t> keys;
    keyer.keys(base, keys);
    return detail::distinct_nonempty(keys);
  }
  const auto in_s = detail::membership(h.universe(), base);
  EdgeSet seen;
  for (const auto& e : h.edges()) {
    Edge t = detail::trace_of(e, in_s);
    if (t.empty() || !seen.insert(std::move(t)).second) return false;
  }
  return true;
}

/// Minimum distinguishing transversal by ascending-size search. Sizes below
/// ceil(log2(|E| + 1)) cannot carry |E| distinct nonempty traces and are skipped.
inline DtResult dt_exact(const Hypergraph& h, Budget budget = {}) {
  detail::require_simple(h, "dt(H)");
  if (h.has_empty_edge()) throw infeasible("an empty edge has an empty trace on every set");
  DtResult r;
  const std::size_t n = h.num_vertices();
  const auto verts = h.vertices();
  const TraceKeyer keyer(h);
  std::vector<std::uint64_t> keys;
  std::vector<vertex_id> s;
  for (std::size_t size = static_cast<std::size_t>(std::bit_width(h.num_edges())); size <= n; ++size) {
    if (size > 64 && n > 64) throw budget_exceeded("dt search beyond 64-vertex sets", size, 64);
    s.resize(size);
    for (Combinations c(n, size); !c.done(); c.next()) {
      if (++r.subsets_examined > budget.subsets)
        throw budget_exceeded("dt search", r.subsets_examined, budget.subsets);
      const auto idx = c.current();
      for (std::size_t i = 0; i < size; ++i) s[i] = verts[idx[i]];
      keyer.keys(s, keys);
      if (detail::distinct_nonempty(keys)) {
        r.value = size;
        r.witness = s;
        return r;
      }
    }
  }
  throw infeasible("no distinguishing transversal exists");
}

/// Lower bounds (|E| - T[H,j]) / delta + j and (|E| - 2^j + 1) / delta + j,
/// where delta is the exact reduced degeneracy or, failing that, the classic
/// degeneracy. The bound needs j <= dt(H); j is admitted only while it does
/// not exceed the ceiling of the best bound already established, starting
/// from j = 0.
inline DtLowerBounds dt_lower_bounds(const Hypergraph& h, const DegeneracyTriple& deg, std::size_t j_max,
                                     TraceCache& cache) {
  detail::require_simple(h, "dt(H)");
  DtLowerBounds out;
  const auto delta = static_cast<std::int64_t>(deg.reduced_upper());
  if (delta == 0) return out;
  const auto m = static_cast<std::int64_t>(h.num_edges());
  for (std::size_t j = 0; j <= j_max && static_cast<std::int64_t>(j) <= out.certified && j < 62; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    auto add = [&](std::int64_t t, BoundForm form) {
      DtBound b{j, Fraction(m - t + jj * delta, delta), form, static_cast<std::size_t>(delta), !deg.reduced_exact};
      out.certified = std::max(out.certified, b.value.ceil());
      out.entries.push_back(b);
    };
    if (auto t = cache.exact(j)) add(static_cast<std::int64_t>(*t), BoundForm::exact_trace);
    add(static_cast<std::int64_t>(nonempty_subset_count(j)), BoundForm::power_of_two);
  }
  return out;
}

inline DtLowerBounds dt_lower_bounds(const Hypergraph& h, const DegeneracyTriple& deg, std::size_t j_max) {
  TraceCache cache(h);
  return dt_lower_bounds(h, deg, j_max, cache);
}

}  // namespace hypertrace
