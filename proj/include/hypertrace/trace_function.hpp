#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertrace/combinatorics.hpp"
#include "hypertrace/degeneracy.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/hypergraph.hpp"
#include "hypertrace/trace_keys.hpp"

namespace hypertrace {

struct TraceFunctionResult {
  std::size_t count = 0;
  /// Lexicographically first k-set attaining count.
  std::vector<vertex_id> witness;
  std::uint64_t subsets_examined = 0;
};

/// T[H,k]: the largest number of distinct traces on a k-subset of V. Only
/// nonempty traces are counted unless include_empty is set.
inline TraceFunctionResult trace_function_exact(const Hypergraph& h, std::size_t k, bool include_empty = false,
                                                Budget budget = {}) {
  const std::size_t n = h.num_vertices();
  if (k > n) throw invalid_input("k=" + std::to_string(k) + " exceeds the vertex count " + std::to_string(n));
  const std::uint64_t subsets = binomial(n, k);
  if (subsets > budget.subsets) throw budget_exceeded("trace function T[H," + std::to_string(k) + "]", subsets, budget.subsets);

  const TraceKeyer keyer(h);
  const auto verts = h.vertices();
  TraceFunctionResult r;
  std::vector<vertex_id> s(k);
  std::vector<std::uint64_t> keys;
  bool first = true;
  for (Combinations c(n, k); !c.done(); c.next()) {
    const auto idx = c.current();
    for (std::size_t i = 0; i < k; ++i) s[i] = verts[idx[i]];
    keyer.keys(s, keys);
    const std::size_t cnt = count_distinct_keys(keys, include_empty);
    ++r.subsets_examined;
    if (first || cnt > r.count) {
      r.count = cnt;
      r.witness = s;
      first = false;
    }
  }
  return r;
}

/// Classical Sauer-Shelah value sum_{i=0}^{d} C(k, i). This counts the empty
/// trace; it bounds the number of all traces on any k-set when vc(H) = d.
constexpr std::uint64_t sauer_shelah_bound(std::uint64_t d, std::uint64_t k) noexcept {
  return binomial_prefix_sum(k, d);
}

/// k (Δ(H) + 1) / 2 + 1, kept as an exact fraction. Δ counts repeated edges.
inline Fraction max_degree_bound(const Hypergraph& h, std::size_t k) {
  const auto delta = static_cast<std::int64_t>(degree_profile(h).max_degree);
  return Fraction(static_cast<std::int64_t>(k) * (delta + 1) + 2, 2);
}

/// min{|E|, k + 1}. The bound holds when the empty trace is counted, so it is
/// compared against T[H,k] with include_empty.
inline std::size_t lower_bound_L(const Hypergraph& h, std::size_t k) {
  if (h.has_repeated_edges()) throw undefined_quantity("L(H,k) is stated for hypergraphs without repeated edges");
  return std::min(h.num_edges(), k + 1);
}

/// Lazily computed T[H,j] values: exact when C(n,j)·|E| stays under
/// cheap_limit, otherwise the relaxation 2^j - 1.
class TraceCache {
 public:
  explicit TraceCache(const Hypergraph& h, std::uint64_t cheap_limit = 10'000'000) : h_(&h), limit_(cheap_limit) {}

  bool cheap(std::size_t j) const {
    return j <= h_->num_vertices() &&
           saturating_mul(binomial(h_->num_vertices(), j), std::max<std::size_t>(h_->num_edges(), 1)) <= limit_;
  }

  std::optional<std::size_t> exact(std::size_t j) {
    if (!cheap(j)) return std::nullopt;
    if (values_.size() <= j) values_.resize(j + 1);
    if (!values_[j]) values_[j] = trace_function_exact(*h_, j, false, Budget{saturated}).count;
    return values_[j];
  }

  /// A value at least T[H,j].
  std::uint64_t upper(std::size_t j) {
    if (auto t = exact(j)) return *t;
    return nonempty_subset_count(j);
  }

 private:
  const Hypergraph* h_;
  std::uint64_t limit_;
  std::vector<std::optional<std::size_t>> values_;
};

struct LemmaChainEntry {
  std::size_t j = 0;
  /// delta * (k - j) + T_j
  std::uint64_t bound = 0;
  std::uint64_t t_j = 0;
  bool t_exact = false;
};

struct LemmaChain {
  std::size_t k = 0;
  /// Multiplier actually used: exact reduced degeneracy if known, else the classic degeneracy.
  std::size_t delta_used = 0;
  bool delta_exact = false;
  std::vector<LemmaChainEntry> entries;
  std::uint64_t reduced_times_k = 0;
  std::uint64_t classic_times_k = 0;

  std::uint64_t best() const {
    std::uint64_t b = std::min(reduced_times_k, classic_times_k);
    for (const auto& e : entries) b = std::min(b, e.bound);
    return b;
  }
};

/// Upper bounds on T[H,k] of the form delta·(k - j) + T[H,j] for every
/// j in [0, min(j_max, k)], plus delta·k and classic·k.
inline LemmaChain lemma_chain_bounds(std::size_t k, const DegeneracyTriple& deg, std::size_t j_max, TraceCache& cache) {
  LemmaChain c;
  c.k = k;
  c.delta_used = deg.reduced_upper();
  c.delta_exact = deg.reduced_exact;
  c.reduced_times_k = saturating_mul(c.delta_used, k);
  c.classic_times_k = saturating_mul(deg.classic, k);
  for (std::size_t j = 0; j <= std::min(j_max, k); ++j) {
    LemmaChainEntry e;
    e.j = j;
    const auto exact = cache.exact(j);
    e.t_exact = exact.has_value();
    e.t_j = exact ? *exact : nonempty_subset_count(j);
    e.bound = saturating_add(saturating_mul(c.delta_used, k - j), e.t_j);
    c.entries.push_back(e);
  }
  return c;
}

inline LemmaChain lemma_chain_bounds(const Hypergraph& h, std::size_t k, const DegeneracyTriple& deg, std::size_t j_max) {
  TraceCache cache(h);
  return lemma_chain_bounds(k, deg, j_max, cache);
}

/// All bounds on T[H,k] next to the exact value.
struct BoundProfile {
  std::size_t k = 0;
  std::optional<std::size_t> exact;             // nonempty traces
  std::optional<std::size_t> exact_with_empty;  // all traces
  std::vector<vertex_id> witness;
  std::optional<std::uint64_t> sauer_shelah;    // counts the empty trace
  Fraction max_degree;
  LemmaChain lemma_chain;
  std::optional<std::size_t> lower_L;
};

inline BoundProfile bound_profile(const Hypergraph& h, std::size_t k, const DegeneracyTriple& deg,
                                  std::optional<std::size_t> vc, TraceCache& cache, Budget budget = {}) {
  BoundProfile p;
  p.k = k;
  if (saturating_mul(binomial(h.num_vertices(), k), 2) <= budget.subsets) {
    auto t = trace_function_exact(h, k, false, budget);
    p.exact = t.count;
    p.witness = std::move(t.witness);
    p.exact_with_empty = trace_function_exact(h, k, true, budget).count;
  }
  if (vc) p.sauer_shelah = sauer_shelah_bound(*vc, k);
  p.max_degree = max_degree_bound(h, k);
  p.lemma_chain = lemma_chain_bounds(k, deg, k, cache);
  if (!h.has_repeated_edges()) p.lower_L = lower_bound_L(h, k);
  return p;
}

/// Descriptions of every inequality in the profile that fails. Empty when all hold.
inline std::vector<std::string> bound_violations(const BoundProfile& p) {
  std::vector<std::string> out;
  const std::string at = " at k=" + std::to_string(p.k);
  if (p.exact) {
    const std::uint64_t t = *p.exact;
    if (Fraction(static_cast<std::int64_t>(t)) > p.max_degree) out.push_back("max-degree bound" + at);
    if (t > p.lemma_chain.reduced_times_k) out.push_back("reduced degeneracy times k" + at);
    if (t > p.lemma_chain.classic_times_k) out.push_back("classic degeneracy times k" + at);
    for (const auto& e : p.lemma_chain.entries)
      if (t > e.bound) out.push_back("lemma chain j=" + std::to_string(e.j) + at);
  }
  if (p.exact_with_empty) {
    if (p.sauer_shelah && *p.exact_with_empty > *p.sauer_shelah) out.push_back("Sauer-Shelah" + at);
    if (p.lower_L && *p.lower_L > *p.exact_with_empty) out.push_back("lower bound L" + at);
  }
  return out;
}

}  // namespace hypertrace
