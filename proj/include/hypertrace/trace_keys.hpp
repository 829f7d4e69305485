#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hypertrace/errors.hpp"
#include "hypertrace/hypergraph.hpp"

namespace hypertrace {

/// Encodes the trace of every edge on a small vertex set S as a 64-bit key,
/// such that equal keys mean equal traces and key 0 means the empty trace.
///
/// With at most 64 active vertices the edges are precomputed as bit masks and
/// any S works; otherwise S is limited to 64 vertices and keys are positional.
/// The positional path uses internal scratch space: one keyer per thread.
class TraceKeyer {
 public:
  explicit TraceKeyer(const Hypergraph& h) : h_(&h) {
    if (h.num_vertices() <= 64) {
      compact_.assign(h.universe(), 0);
      for (std::size_t i = 0; i < h.num_vertices(); ++i) compact_[h.vertices()[i]] = static_cast<std::uint8_t>(i);
      masks_.reserve(h.num_edges());
      for (const auto& e : h.edges()) {
        std::uint64_t m = 0;
        for (vertex_id v : e) m |= std::uint64_t{1} << compact_[v];
        masks_.push_back(m);
      }
      use_masks_ = true;
    } else {
      position_.assign(h.universe(), 0);
    }
  }

  std::size_t num_edges() const noexcept { return h_->num_edges(); }

  /// Fills out with one key per edge (including empty edges), in edge order.
  void keys(std::span<const vertex_id> s, std::vector<std::uint64_t>& out) const {
    out.clear();
    if (use_masks_) {
      std::uint64_t sm = 0;
      for (vertex_id v : s) sm |= std::uint64_t{1} << compact_[v];
      for (std::uint64_t m : masks_) out.push_back(m & sm);
      return;
    }
    if (s.size() > 64) throw budget_exceeded("trace keys on more than 64 vertices", s.size(), 64);
    for (std::size_t i = 0; i < s.size(); ++i) position_[s[i]] = static_cast<std::uint8_t>(i + 1);
    for (const auto& e : h_->edges()) {
      std::uint64_t k = 0;
      for (vertex_id v : e)
        if (position_[v]) k |= std::uint64_t{1} << (position_[v] - 1);
      out.push_back(k);
    }
    for (vertex_id v : s) position_[v] = 0;
  }

 private:
  const Hypergraph* h_;
  bool use_masks_ = false;
  std::vector<std::uint8_t> compact_;
  std::vector<std::uint64_t> masks_;
  mutable std::vector<std::uint8_t> position_;
};

/// Number of distinct keys; key 0 (the empty trace) counts only if include_empty.
inline std::size_t count_distinct_keys(std::vector<std::uint64_t>& keys, bool include_empty) {
  std::sort(keys.begin(), keys.end());
  const auto last = std::unique(keys.begin(), keys.end());
  std::size_t count = static_cast<std::size_t>(last - keys.begin());
  if (!include_empty && count > 0 && keys.front() == 0) --count;
  return count;
}

}  // namespace hypertrace
