#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypertrace/combinatorics.hpp"
#include "hypertrace/degeneracy.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/generate.hpp"
#include "hypertrace/hypergraph.hpp"
#include "hypertrace/vc_dimension.hpp"

namespace hypertrace {

enum class BenchSuite { peel, vc };

struct BenchRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t incidence = 0;
  std::uint64_t seed = 0;
  std::uint64_t instance_hash = 0;
  /// Best of the repetitions; unset when skipped.
  std::optional<double> ms;
  std::optional<std::size_t> result;
};

struct BenchOptions {
  std::size_t repetitions = 3;
  Budget budget;
  std::size_t max_edge = 19;
  /// Edges per vertex in the generated instances.
  std::size_t edges_per_vertex = 1;
};

/// FNV-1a over the edge lists; stable across runs and platforms.
inline std::uint64_t instance_hash(const Hypergraph& h) {
  std::uint64_t x = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      x ^= (v >> (8 * i)) & 0xff;
      x *= 0x100000001b3ULL;
    }
  };
  mix(h.universe());
  for (const auto& e : h.edges()) {
    mix(e.size());
    for (vertex_id v : e) mix(v);
  }
  return x;
}

inline std::vector<std::size_t> default_bench_sizes(BenchSuite s) {
  if (s == BenchSuite::peel) return {1000, 10000, 100000};
  return {8, 12, 16, 20, 24, 28};
}

/// Sizes are vertex counts. Peel instances have m = edges_per_vertex * n edges of
/// size uniform in [1, max_edge]; vc instances use 2n edges of size <= 4 and
/// report rows past the subset budget as skipped.
inline std::vector<BenchRow> run_bench(BenchSuite suite, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                       const BenchOptions& opt = {}) {
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::size_t n = sizes[i];
    const std::uint64_t s = seed + i;
    const Hypergraph h = suite == BenchSuite::peel
                             ? random_hypergraph(n, opt.edges_per_vertex * n, opt.max_edge, s, false)
                             : random_hypergraph(n, 2 * n, std::min<std::size_t>(4, n), s, true);
    const std::uint64_t hash = instance_hash(h);
    auto time = [&](const std::string& name, const std::function<std::size_t()>& body) {
      BenchRow row{name, h.num_vertices(), h.num_edges(), h.incidence_size(), s, hash, std::nullopt, std::nullopt};
      try {
        for (std::size_t r = 0; r < std::max<std::size_t>(opt.repetitions, 1); ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          row.result = body();
          const auto t1 = std::chrono::steady_clock::now();
          const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          row.ms = row.ms ? std::min(*row.ms, ms) : ms;
        }
      } catch (const budget_exceeded&) {
        row.ms.reset();
        row.result.reset();
      }
      rows.push_back(row);
    };
    if (suite == BenchSuite::peel) {
      time("peel_degeneracy", [&] { return peel_degeneracy(h).value; });
      time("peel_pseudo_degeneracy", [&] { return peel_pseudo_degeneracy(h).value; });
    } else {
      time("vc_exact", [&] { return vc_exact(h, opt.budget).dimension; });
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "algorithm,n,m,sum_edge_sizes,seed,instance_hash,wall_ms,result,status\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.incidence << ',' << r.seed << ",0x" << std::hex
        << r.instance_hash << std::dec << ',';
    if (r.ms) out << *r.ms;
    out << ',';
    if (r.result) out << *r.result;
    out << ',' << (r.ms ? "ok" : "skipped (budget)") << '\n';
  }
  return out.str();
}

/// Least-squares slope of log(time) against log(sum of edge sizes), per
/// algorithm, over rows that ran. Needs two rows with distinct sizes.
inline std::map<std::string, double> scaling_exponents(const std::vector<BenchRow>& rows) {
  std::map<std::string, std::vector<std::pair<double, double>>> pts;
  for (const auto& r : rows)
    if (r.ms && r.incidence > 0) pts[r.algorithm].emplace_back(std::log(double(r.incidence)), std::log(std::max(*r.ms, 1e-3)));
  std::map<std::string, double> out;
  for (const auto& [name, p] : pts) {
    if (p.size() < 2) continue;
    double mx = 0, my = 0;
    for (auto [x, y] : p) mx += x, my += y;
    mx /= double(p.size());
    my /= double(p.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : p) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
    if (sxx > 0) out[name] = sxy / sxx;
  }
  return out;
}

}  // namespace hypertrace
