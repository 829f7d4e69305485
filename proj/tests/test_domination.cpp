#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "oracles.hpp"

using namespace hypertrace;

namespace {

oracle::Kind as_oracle(DominationKind k) {
  switch (k) {
    case DominationKind::LD: return oracle::Kind::LD;
    case DominationKind::ID: return oracle::Kind::ID;
    default: return oracle::Kind::OLD;
  }
}

bool has_bound(const std::vector<NamedBound>& list, const std::string& name, std::size_t j, const std::string& form,
               Fraction v) {
  for (const auto& b : list)
    if (b.name == name && b.j == j && b.form == form && b.value == v) return true;
  return false;
}

}  // namespace

TEST(GammaExact, P4) {
  const auto g = fx::path(4);
  auto r = gamma_exact(g, DominationKind::LD);
  EXPECT_EQ(r.exact, 2u);
  EXPECT_EQ(r.witness, (std::vector<vertex_id>{0, 2}));
  r = gamma_exact(g, DominationKind::ID);
  EXPECT_EQ(r.exact, 3u);
  EXPECT_EQ(r.witness, (std::vector<vertex_id>{0, 1, 2}));
  EXPECT_EQ(gamma_exact(g, DominationKind::OLD).exact, 4u);
}

TEST(GammaExact, Star) {
  EXPECT_EQ(gamma_exact(fx::star(3), DominationKind::LD).exact, 3u);
  const auto old = gamma_exact(fx::star(3), DominationKind::OLD);
  ASSERT_TRUE(old.infeasible);
  EXPECT_EQ(old.infeasible->vertices, (std::vector<vertex_id>{1, 2}));
}

TEST(GammaExact, Infeasibility) {
  const auto k2 = gamma_exact(fx::path(2), DominationKind::ID);
  ASSERT_TRUE(k2.infeasible);
  EXPECT_FALSE(k2.exact);
  const auto iso = gamma_exact(Graph(3), DominationKind::OLD);
  ASSERT_TRUE(iso.infeasible);
  EXPECT_EQ(iso.infeasible->vertices, (std::vector<vertex_id>{0}));
}

// Without edges each vertex must lie in the set: LD and ID take all of V, OLD has no solution.
TEST(GammaExact, Edgeless) {
  const Graph g(3);
  EXPECT_EQ(gamma_exact(g, DominationKind::LD).exact, 3u);
  EXPECT_EQ(gamma_exact(g, DominationKind::ID).exact, 3u);
  EXPECT_TRUE(gamma_exact(g, DominationKind::OLD).infeasible);
  const auto b = domination_lower_bounds(g, 4);
  EXPECT_TRUE(b.infeasible[2]);
  EXPECT_FALSE(b.infeasible[0]);
}

TEST(GammaExact, Budget) {
  EXPECT_THROW(gamma_exact(random_gnp(40, 0.2, 1), DominationKind::LD, Budget{100}), budget_exceeded);
  EXPECT_THROW(gamma_exact(random_tree(70, 1), DominationKind::LD), budget_exceeded);
}

TEST(Satisfies, Examples) {
  const auto g = fx::path(4);
  EXPECT_TRUE(satisfies(g, DominationKind::LD, std::vector<vertex_id>{0, 2}));
  EXPECT_FALSE(satisfies(g, DominationKind::ID, std::vector<vertex_id>{0, 2}));
  EXPECT_TRUE(satisfies(g, DominationKind::ID, std::vector<vertex_id>{0, 1, 2}));
  EXPECT_FALSE(satisfies(g, DominationKind::LD, std::vector<vertex_id>{1}));
}

TEST(DominationBounds, P4) {
  const auto b = domination_lower_bounds(fx::path(4), 4);
  // dt bound on H^o at j=1 with exact T = 1
  ASSERT_TRUE(b.open.reduced_exact);
  EXPECT_LE(*b.open.reduced(), 2u);
  EXPECT_GE(b.certified_of(DominationKind::OLD), 3);
  EXPECT_LE(b.certified_of(DominationKind::OLD), 4);
  // ID, power-of-two at j=2 with delta 2
  EXPECT_TRUE(has_bound(b.of(DominationKind::ID), "dt of H", 2, "power-of-two", Fraction(5, 2)));
  EXPECT_EQ(b.certified_of(DominationKind::ID), 3);
  EXPECT_EQ(b.certified_of(DominationKind::LD), 2);
}

TEST(DominationBounds, OldWithLooserEstimate) {
  // An estimate of 2 for the reduced degeneracy of H^o still gives (4 - 1)/2 + 1 at j = 1.
  const Hypergraph open = neighborhood_hypergraph(fx::path(4), false);
  ASSERT_FALSE(open.has_repeated_edges());
  DegeneracyTriple t{1, 1, 2, 2, false};
  const auto lb = dt_lower_bounds(open, t, 3);
  bool seen = false;
  for (const auto& b : lb.entries)
    if (b.j == 1 && b.form == BoundForm::exact_trace) {
      EXPECT_EQ(b.value, Fraction(5, 2));
      seen = true;
    }
  EXPECT_TRUE(seen);
  EXPECT_LE(lb.certified, 4);
}

TEST(TreeStats, Examples) {
  auto s = tree_stats(fx::path(4));
  EXPECT_EQ(s.leaf_count(), 2u);
  EXPECT_EQ(s.support_count(), 2u);
  EXPECT_EQ(s.canonical_supports, (std::vector<vertex_id>{1, 2}));
  s = tree_stats(fx::star(3));
  EXPECT_EQ(s.leaf_count(), 3u);
  EXPECT_EQ(s.support_count(), 1u);
  EXPECT_EQ(s.canonical_supports, (std::vector<vertex_id>{0}));
  s = tree_stats(fx::path(2));
  EXPECT_EQ(s.leaf_count(), 2u);
  EXPECT_EQ(s.support_count(), 2u);
  EXPECT_TRUE(s.canonical_supports.empty());
}

TEST(TreeBounds, Examples) {
  auto b = tree_lower_bounds(fx::path(4));
  ASSERT_TRUE(b.applicable);
  EXPECT_EQ(b.ld, Fraction(5, 3));
  EXPECT_EQ(b.ld_ceil(), 2);
  EXPECT_EQ(b.old_ceil(), 3);
  ASSERT_TRUE(b.id);
  EXPECT_EQ(*b.id_ceil(), 3);
  b = tree_lower_bounds(fx::star(3));
  EXPECT_EQ(b.ld, Fraction(3));
  EXPECT_FALSE(b.id);
  EXPECT_FALSE(tree_lower_bounds(fx::path(3)).applicable);
  EXPECT_THROW(tree_lower_bounds(Graph(3)), invalid_input);
}

TEST(TreeCertificates, Examples) {
  for (const auto& g : {fx::path(4), fx::star(10), random_tree(50, 3)}) {
    const auto items = tree_degeneracy_certificates(g);
    ASSERT_EQ(items.size(), 5u);
    for (const auto& it : items) EXPECT_TRUE(it.pass) << it.name;
  }
  const auto p4 = tree_degeneracy_certificates(fx::path(4));
  EXPECT_EQ(p4[0].value, 2u);
  EXPECT_THROW(tree_degeneracy_certificates(Graph(1)), invalid_input);
}

TEST(DominationProperties, MatchesOracleAndBridges) {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 120; ++it) {
    const auto g = fx::random_graph(rng, 1, 9);
    const auto bounds = domination_lower_bounds(g, 6);
    std::array<std::optional<std::size_t>, 3> gamma;
    for (auto kind : all_domination_kinds) {
      const auto r = gamma_exact(g, kind);
      const auto o = oracle::gamma(g, as_oracle(kind));
      const auto idx = static_cast<std::size_t>(kind);
      if (o == SIZE_MAX) {
        EXPECT_TRUE(r.infeasible);
        EXPECT_TRUE(bounds.infeasible[idx]);
        continue;
      }
      ASSERT_TRUE(r.exact);
      EXPECT_EQ(*r.exact, o);
      EXPECT_TRUE(satisfies(g, kind, r.witness));
      EXPECT_LE(bounds.certified_of(kind), static_cast<std::int64_t>(o));
      for (const auto& b : bounds.of(kind)) EXPECT_LE(b.ceil(), static_cast<std::int64_t>(o)) << b.name;
      gamma[idx] = o;
    }
    if (gamma[1]) {
      EXPECT_GE(*gamma[1], *gamma[0]);
      EXPECT_EQ(*gamma[1], dt_exact(neighborhood_hypergraph(g, true)).value);
    }
    if (gamma[2]) {
      EXPECT_GE(*gamma[2], *gamma[0]);
      EXPECT_EQ(*gamma[2], dt_exact(neighborhood_hypergraph(g, false)).value);
    }
  }
}

TEST(DominationProperties, TreeClosedFormBelowExact) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = random_tree(4 + seed % 9, seed);
    const auto b = tree_lower_bounds(g);
    ASSERT_TRUE(b.applicable);
    EXPECT_LE(b.ld_ceil(), static_cast<std::int64_t>(*gamma_exact(g, DominationKind::LD).exact));
    const auto id = gamma_exact(g, DominationKind::ID);
    if (b.id && id.exact) {
      EXPECT_LE(*b.id_ceil(), static_cast<std::int64_t>(*id.exact));
    }
    const auto old = gamma_exact(g, DominationKind::OLD);
    if (old.exact) {
      EXPECT_LE(b.old_ceil(), static_cast<std::int64_t>(*old.exact));
    }
  }
}

TEST(DominationProperties, NeighborhoodCaps) {
  std::mt19937_64 rng(62);
  for (int it = 0; it < 60; ++it) {
    const auto g = fx::random_graph(rng, 2, 25);
    const auto b = domination_lower_bounds(g, 2, 0);
    EXPECT_LE(b.closed.classic, g.max_degree() + 1);
    EXPECT_LE(b.open.classic, g.max_degree());
  }
}
