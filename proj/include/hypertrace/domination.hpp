#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypertrace/combinatorics.hpp"
#include "hypertrace/degeneracy.hpp"
#include "hypertrace/distinguishing.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/graph.hpp"
#include "hypertrace/trace_function.hpp"

namespace hypertrace {

/// Locating-dominating set, identifying code, open locating-dominating set.
enum class DominationKind { LD, ID, OLD };

inline constexpr std::array<DominationKind, 3> all_domination_kinds{DominationKind::LD, DominationKind::ID,
                                                                    DominationKind::OLD};

inline const char* to_string(DominationKind k) {
  switch (k) {
    case DominationKind::LD: return "LD";
    case DominationKind::ID: return "ID";
    case DominationKind::OLD: return "OLD";
  }
  return "?";
}

struct Infeasibility {
  std::string reason;
  std::vector<vertex_id> vertices;
};

/// A lower bound on a domination number, before and after ceiling.
struct NamedBound {
  std::string name;
  std::optional<std::size_t> j;
  Fraction value;
  std::string form;
  std::string delta_estimate_used;
  bool safe_weakened = false;

  std::int64_t ceil() const { return value.ceil(); }
};

struct DominationReport {
  DominationKind kind = DominationKind::LD;
  std::optional<std::size_t> exact;
  std::vector<vertex_id> witness;
  std::optional<Infeasibility> infeasible;
  std::vector<NamedBound> bounds;
  std::vector<std::string> caveats;
  std::uint64_t nodes = 0;
};

/// Why no set of the given kind exists, or nullopt if S = V qualifies.
inline std::optional<Infeasibility> domination_infeasibility(const Graph& g, DominationKind kind) {
  if (kind == DominationKind::ID) {
    if (auto t = find_twins(g, true))
      return Infeasibility{"closed twins have equal traces on every set", {t->first, t->second}};
  } else if (kind == DominationKind::OLD) {
    if (auto v = find_isolated(g)) return Infeasibility{"isolated vertex has no open neighbor", {*v}};
    if (auto t = find_twins(g, false))
      return Infeasibility{"open twins have equal traces on every set", {t->first, t->second}};
  }
  return std::nullopt;
}

/// Whether s is a set of the given kind.
inline bool satisfies(const Graph& g, DominationKind kind, std::span<const vertex_id> s) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (vertex_id v : s) {
    if (v >= n) throw out_of_range_vertex("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  const bool closed = kind != DominationKind::OLD;
  std::vector<Edge> codes;
  for (vertex_id x = 0; x < n; ++x) {
    Edge code;
    for (vertex_id u : g.neighborhood(x, closed))
      if (in[u]) code.push_back(u);
    if (code.empty()) return false;
    if (kind == DominationKind::LD && in[x]) continue;
    // For x outside S, N(x) ∩ S = N[x] ∩ S.
    codes.push_back(std::move(code));
  }
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

namespace detail {

class DominationSearch {
 public:
  DominationSearch(const Graph& g, DominationKind kind, std::uint64_t budget)
      : n_(g.num_vertices()), kind_(kind), budget_(budget) {
    closed_.resize(n_);
    open_.resize(n_);
    for (vertex_id v = 0; v < n_; ++v) {
      for (vertex_id u : g.neighbors(v)) open_[v] |= std::uint64_t{1} << u;
      closed_[v] = open_[v] | (std::uint64_t{1} << v);
    }
    const auto& dom = kind == DominationKind::OLD ? open_ : closed_;
    // suffix_[i]: vertices >= i
    suffix_.assign(n_ + 1, 0);
    for (std::size_t i = n_; i-- > 0;) suffix_[i] = suffix_[i + 1] | (std::uint64_t{1} << i);
    dom_ = &dom;
  }

  /// Smallest satisfying set of exactly `size` vertices, lexicographically first.
  std::optional<std::uint64_t> search(std::size_t size) {
    size_ = size;
    found_.reset();
    dfs(0, 0, 0);
    return found_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool check(std::uint64_t s) const {
    std::array<std::uint64_t, 64> codes{};
    std::size_t c = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      const std::uint64_t code = (*dom_)[x] & s;
      if (!code) return false;
      if (kind_ == DominationKind::LD && ((s >> x) & 1)) continue;
      codes[c++] = code;
    }
    std::sort(codes.begin(), codes.begin() + static_cast<std::ptrdiff_t>(c));
    return std::adjacent_find(codes.begin(), codes.begin() + static_cast<std::ptrdiff_t>(c)) ==
           codes.begin() + static_cast<std::ptrdiff_t>(c);
  }

  void dfs(std::size_t next, std::size_t depth, std::uint64_t chosen) {
    if (found_) return;
    if (++nodes_ > budget_) throw budget_exceeded("domination search", nodes_, budget_);
    if (depth == size_) {
      if (check(chosen)) found_ = chosen;
      return;
    }
    if (n_ - next < size_ - depth) return;
    // Every vertex must still be reachable by its dominator set.
    const std::uint64_t reachable = chosen | suffix_[next];
    for (std::size_t x = 0; x < n_; ++x)
      if (!((*dom_)[x] & reachable)) return;
    for (std::size_t v = next; v < n_ && !found_; ++v) dfs(v + 1, depth + 1, chosen | (std::uint64_t{1} << v));
  }

  std::size_t n_;
  DominationKind kind_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> closed_, open_, suffix_;
  const std::vector<std::uint64_t>* dom_ = nullptr;
  std::size_t size_ = 0;
  std::optional<std::uint64_t> found_;
  std::uint64_t nodes_ = 0;
};

inline std::vector<vertex_id> mask_to_vertices(std::uint64_t m) {
  std::vector<vertex_id> out;
  for (; m; m &= m - 1) out.push_back(static_cast<vertex_id>(std::countr_zero(m)));
  return out;
}

}  // namespace detail

/// Exact domination number of the given kind by ascending-size depth-first
/// search with a reachability prune. Graphs are limited to 64 vertices.
inline DominationReport gamma_exact(const Graph& g, DominationKind kind, Budget budget = {}) {
  DominationReport r;
  r.kind = kind;
  if (auto why = domination_infeasibility(g, kind)) {
    r.infeasible = std::move(why);
    return r;
  }
  if (g.num_vertices() > 64) throw budget_exceeded("domination search on more than 64 vertices", g.num_vertices(), 64);
  detail::DominationSearch search(g, kind, budget.subsets);
  for (std::size_t size = 0; size <= g.num_vertices(); ++size) {
    if (auto s = search.search(size)) {
      r.exact = size;
      r.witness = detail::mask_to_vertices(*s);
      break;
    }
  }
  r.nodes = search.nodes();
  return r;
}

struct DominationBounds {
  DegeneracyTriple closed;
  DegeneracyTriple open;
  /// Indexed by DominationKind.
  std::array<std::vector<NamedBound>, 3> bounds;
  std::array<std::int64_t, 3> certified{};
  std::array<std::optional<Infeasibility>, 3> infeasible;
  std::array<std::vector<std::string>, 3> caveats;

  const std::vector<NamedBound>& of(DominationKind k) const { return bounds[static_cast<std::size_t>(k)]; }
  std::int64_t certified_of(DominationKind k) const { return certified[static_cast<std::size_t>(k)]; }
};

namespace detail {

inline std::string describe_estimate(const char* name, const DegeneracyTriple& t) {
  return std::string(name) + (t.reduced_exact ? "=" : "<=") + std::to_string(t.reduced_upper());
}

}  // namespace detail

/// General lower bounds on γ^LD, γ^ID and γ^OLD from the closed and open
/// neighborhood hypergraphs H and H^o. With δ** = min(δ̌(H), δ̌(H^o)):
///   γ^LD  >= (n + δ**·j - T[H,j]) / (δ** + 1)
///   γ^ID  >= (n - T[H,j]) / δ̌(H) + j         (and the LD bound)
///   γ^OLD >= (n - T[·,j]) / δ̌(H^o) + j        (and the LD bound)
/// Each j is admitted only while it is at most the bound already certified for
/// that kind. Where δ̌ is not known exactly its classic upper estimate is used.
inline DominationBounds domination_lower_bounds(const Graph& g, std::size_t j_max,
                                                std::size_t exact_limit = default_exact_limit) {
  DominationBounds out;
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const Hypergraph closed = neighborhood_hypergraph(g, true);
  const Hypergraph open = neighborhood_hypergraph(g, false);
  out.closed = reduced_degeneracy(closed, exact_limit);
  out.open = reduced_degeneracy(open, exact_limit);
  TraceCache t_closed(closed), t_open(open);

  const auto d_closed = static_cast<std::int64_t>(out.closed.reduced_upper());
  const auto d_open = static_cast<std::int64_t>(out.open.reduced_upper());
  const std::int64_t d_min = std::min(d_closed, d_open);
  const bool min_weakened = d_closed <= d_open ? !out.closed.reduced_exact : !out.open.reduced_exact;
  const std::string min_desc =
      "min(" + detail::describe_estimate("H", out.closed) + ", " + detail::describe_estimate("H^o", out.open) + ")";

  auto& ld = out.bounds[0];
  auto& ld_cert = out.certified[0];
  for (std::size_t j = 0; j <= j_max && static_cast<std::int64_t>(j) <= ld_cert && j < 62; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    auto add = [&](std::int64_t t, BoundForm form) {
      NamedBound b{"LD general", j, Fraction(n + d_min * jj - t, d_min + 1), to_string(form), min_desc, min_weakened};
      ld_cert = std::max(ld_cert, b.ceil());
      ld.push_back(std::move(b));
    };
    if (auto t = t_closed.exact(j)) add(static_cast<std::int64_t>(*t), BoundForm::exact_trace);
    add(static_cast<std::int64_t>(nonempty_subset_count(j)), BoundForm::power_of_two);
  }

  auto dt_style = [&](DominationKind kind, std::int64_t delta, const DegeneracyTriple& tri, const char* hname,
                      bool use_both_traces) {
    const auto idx = static_cast<std::size_t>(kind);
    if (auto why = domination_infeasibility(g, kind)) {
      out.infeasible[idx] = std::move(why);
      out.caveats[idx].push_back("infeasible: " + out.infeasible[idx]->reason);
      return;
    }
    auto& list = out.bounds[idx];
    auto& cert = out.certified[idx];
    for (const auto& b : ld) {
      NamedBound copy = b;
      copy.name = "LD transfer";
      list.push_back(std::move(copy));
    }
    cert = ld_cert;
    if (delta == 0) return;
    const std::string desc = detail::describe_estimate(hname, tri);
    for (std::size_t j = 0; j <= j_max && static_cast<std::int64_t>(j) <= cert && j < 62; ++j) {
      const auto jj = static_cast<std::int64_t>(j);
      auto add = [&](std::int64_t t, BoundForm form) {
        NamedBound b{std::string("dt of ") + hname, j, Fraction(n - t + jj * delta, delta), to_string(form), desc,
                     !tri.reduced_exact};
        cert = std::max(cert, b.ceil());
        list.push_back(std::move(b));
      };
      auto t1 = t_closed.exact(j);
      if (use_both_traces) {
        auto t2 = t_open.exact(j);
        if (t1 && t2) add(static_cast<std::int64_t>(std::max(*t1, *t2)), BoundForm::exact_trace);
      } else if (t1) {
        add(static_cast<std::int64_t>(*t1), BoundForm::exact_trace);
      }
      add(static_cast<std::int64_t>(nonempty_subset_count(j)), BoundForm::power_of_two);
    }
    if (use_both_traces)
      out.caveats[idx].push_back(
          "exact-T entries use max(T[H,j], T[H^o,j]) so that both readings of the trace term are covered");
  };
  dt_style(DominationKind::ID, d_closed, out.closed, "H", false);
  dt_style(DominationKind::OLD, d_open, out.open, "H^o", true);
  return out;
}

struct TreeBounds {
  bool applicable = false;
  std::string note;
  Fraction ld;
  std::optional<Fraction> id;
  Fraction old;

  std::int64_t ld_ceil() const { return ld.ceil(); }
  std::optional<std::int64_t> id_ceil() const { return id ? std::optional<std::int64_t>(id->ceil()) : std::nullopt; }
  std::int64_t old_ceil() const { return old.ceil(); }
};

/// Closed-form lower bounds for trees with n >= 4, L leaves and S support vertices:
/// γ^LD >= (n + 1 + 2(L - S)) / 3, γ^ID >= (n + 3) / 3 when every support vertex
/// has a single leaf, γ^OLD >= (n + 1) / 2.
inline TreeBounds tree_lower_bounds(const Graph& g) {
  const TreeStats st = tree_stats(g);
  if (!st.is_tree) throw invalid_input("tree bounds need a tree");
  TreeBounds b;
  if (st.n < 4) {
    b.note = "n < 4: use the general neighborhood bounds";
    return b;
  }
  b.applicable = true;
  const auto n = static_cast<std::int64_t>(st.n);
  const auto l = static_cast<std::int64_t>(st.leaf_count());
  const auto s = static_cast<std::int64_t>(st.support_count());
  b.ld = Fraction(n + 1 + 2 * (l - s), 3);
  if (st.single_leaf_supports)
    b.id = Fraction(n + 3, 3);
  else
    b.note = "ID bound omitted: some support vertex has more than one leaf";
  b.old = Fraction(n + 1, 2);
  return b;
}

struct CertificateItem {
  std::string name;
  std::size_t limit = 0;
  /// Exact value, or the upper end of the known interval.
  std::size_t value = 0;
  std::optional<std::size_t> lower;
  bool exact = true;
  bool pass = false;
};

/// Checks the five degeneracy caps for closed (H) and open (H^o) neighborhood
/// hypergraphs of a tree: classic(H) <= 3, classic(H^o) <= 2,
/// reduced(H^o) <= 2, pseudo(H) <= 2, pseudo(H^o) <= 2.
inline std::vector<CertificateItem> tree_degeneracy_certificates(const Graph& g,
                                                                 std::size_t exact_limit = default_exact_limit) {
  if (!is_tree(g) || g.num_vertices() < 2) throw invalid_input("tree certificates need a tree with n >= 2");
  const Hypergraph closed = neighborhood_hypergraph(g, true);
  const Hypergraph open = neighborhood_hypergraph(g, false);
  std::vector<CertificateItem> items;
  auto add = [&](std::string name, std::size_t limit, std::size_t value) {
    items.push_back({std::move(name), limit, value, std::nullopt, true, value <= limit});
  };
  add("classic(H) <= 3", 3, peel_degeneracy(closed).value);
  add("classic(H^o) <= 2", 2, peel_degeneracy(open).value);
  const DegeneracyTriple red = reduced_degeneracy(open, exact_limit);
  CertificateItem r{"reduced(H^o) <= 2", 2, red.reduced_hi, std::nullopt, red.reduced_exact, red.reduced_hi <= 2};
  if (!red.reduced_exact) r.lower = red.reduced_lo;
  items.push_back(r);
  add("pseudo(H) <= 2", 2, peel_pseudo_degeneracy(closed).value);
  add("pseudo(H^o) <= 2", 2, peel_pseudo_degeneracy(open).value);
  return items;
}

}  // namespace hypertrace
