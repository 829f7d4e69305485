#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "oracles.hpp"

using namespace hypertrace;

namespace {

std::vector<Edge> sorted_edges(const Hypergraph& h) {
  auto e = h.edges();
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST(BuildHypergraph, Triangle) {
  const auto r = build_hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}, false);
  EXPECT_EQ(r.hypergraph.num_edges(), 3u);
  EXPECT_EQ(r.collapsed, 0u);
}

TEST(BuildHypergraph, DuplicatesCollapse) {
  const auto r = build_hypergraph(2, {{0}, {0}}, false);
  EXPECT_EQ(r.hypergraph.num_edges(), 1u);
  EXPECT_EQ(r.collapsed, 1u);
  EXPECT_FALSE(r.hypergraph.has_repeated_edges());
}

TEST(BuildHypergraph, AllowMultiKeepsRepeats) {
  const auto r = build_hypergraph(2, {{0}, {0}}, true);
  EXPECT_EQ(r.hypergraph.num_edges(), 2u);
  EXPECT_TRUE(r.hypergraph.has_repeated_edges());
}

TEST(BuildHypergraph, OutOfRangeVertex) {
  EXPECT_THROW(build_hypergraph(3, {{0, 3}}, false), out_of_range_vertex);
}

TEST(BuildHypergraph, NormalizesEdges) {
  const auto r = build_hypergraph(4, {{3, 1, 1}}, false);
  EXPECT_EQ(r.hypergraph.edges()[0], (Edge{1, 3}));
}

TEST(BuildHypergraph, RepeatWithoutAllowMultiThrowsInConstructor) {
  EXPECT_THROW(Hypergraph(2, {{0}, {0}}, false), undefined_quantity);
}

TEST(BuildHypergraph, ClosedNeighborhoodsOfP4) {
  const auto h = neighborhood_hypergraph(fx::path(4), true);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 1, 2}, {1, 2, 3}, {2, 3}}));
}

TEST(Restriction, TriangleOnPair) {
  const std::vector<vertex_id> s{1, 2};
  const auto r = restriction(fx::tri(), s);
  EXPECT_EQ(sorted_edges(r), (std::vector<Edge>{{1}, {1, 2}, {2}}));
  EXPECT_EQ(r.num_vertices(), 2u);
}

TEST(Restriction, FullSetIsIdentity) {
  const auto h = fx::tri();
  const std::vector<vertex_id> all{0, 1, 2};
  EXPECT_TRUE(same_edge_set(restriction(h, all), h));
}

TEST(Restriction, EmptyBase) {
  const auto r = restriction(fx::tri(), std::vector<vertex_id>{});
  EXPECT_EQ(r.num_vertices(), 0u);
  EXPECT_EQ(r.num_edges(), 0u);
}

TEST(Restriction, RejectsUnknownVertex) {
  EXPECT_THROW(restriction(fx::tri(), std::vector<vertex_id>{5}), out_of_range_vertex);
}

TEST(PseudoInduced, TriangleOnPair) {
  const auto p = pseudo_induced(fx::tri(), std::vector<vertex_id>{1, 2});
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(PseudoInduced, FullSetKeepsEverything) {
  const auto h = fx::tri();
  EXPECT_EQ(pseudo_induced(h, std::vector<vertex_id>{0, 1, 2}).edges(), h.edges());
}

TEST(PseudoInduced, P4ClosedOnFirstThree) {
  const auto h = neighborhood_hypergraph(fx::path(4), true);
  const auto p = pseudo_induced(h, std::vector<vertex_id>{0, 1, 2});
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 1}, {0, 1, 2}}));
}

TEST(TraceFamily, Examples) {
  const auto h = fx::tri();
  auto f = trace_family(h, std::vector<vertex_id>{0});
  EXPECT_EQ(f.count, 1u);
  EXPECT_EQ(f.traces, (std::vector<Edge>{{0}}));
  f = trace_family(h, std::vector<vertex_id>{0, 1});
  EXPECT_EQ(f.count, 3u);
  EXPECT_EQ(f.traces, (std::vector<Edge>{{0}, {0, 1}, {1}}));
  EXPECT_EQ(trace_family(h, std::vector<vertex_id>{}).count, 0u);
  EXPECT_EQ(trace_family(h, std::vector<vertex_id>{0}, true).count, 2u);
}

TEST(DegreeProfile, Examples) {
  auto p = degree_profile(fx::tri());
  EXPECT_EQ(p.degrees, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(p.min_degree, 2u);
  EXPECT_EQ(p.max_degree, 2u);
  p = degree_profile(neighborhood_hypergraph(fx::path(4), true));
  EXPECT_EQ(p.degrees, (std::vector<std::size_t>{2, 3, 3, 2}));
  EXPECT_EQ(p.min_degree, 2u);
  EXPECT_EQ(p.max_degree, 3u);
  p = degree_profile(Hypergraph(3, {}, false));
  EXPECT_EQ(p.degrees, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(HypergraphProperties, TraceInvariants) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const auto h = fx::random_small(rng, 8, 20);
    const auto verts = h.vertices();
    const std::uint64_t all = std::uint64_t{1} << verts.size();
    const auto deg = degree_profile(h);
    const std::uint64_t s_mask = rng() % all;
    const auto s = fx::subset_of(verts, s_mask);
    const auto r = restriction(h, s);
    const auto p = pseudo_induced(h, s);
    const auto tf = trace_family(h, s);

    // every nonempty trace is an edge of the restriction
    EdgeSet redges(r.edges().begin(), r.edges().end());
    for (const auto& e : h.edges()) {
      Edge t;
      for (vertex_id v : e)
        if (std::binary_search(s.begin(), s.end(), v)) t.push_back(v);
      if (!t.empty()) {
        EXPECT_TRUE(redges.count(t));
      }
    }
    // pseudo induced edges are restriction edges, with no larger degrees
    for (const auto& e : p.edges()) EXPECT_TRUE(redges.count(e));
    const auto dr = degree_profile(r);
    const auto dp = degree_profile(p);
    for (vertex_id v : s) {
      EXPECT_LE(dp.degrees[v], dr.degrees[v]);
      EXPECT_LE(dr.degrees[v], deg.degrees[v]);
    }
    // count cap
    const std::uint64_t cap = (std::uint64_t{1} << s.size()) - 1;
    EXPECT_LE(tf.count, std::min<std::uint64_t>(h.num_edges(), cap));
    // composition
    const auto s2 = fx::subset_of(s, rng() % (std::uint64_t{1} << s.size()));
    EXPECT_TRUE(same_edge_set(restriction(r, s2), restriction(h, s2)));
  }
}

TEST(Graph, Basics) {
  const auto g = fx::path(4);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_TRUE(is_tree(g));
  EXPECT_THROW(fx::graph(2, {{0, 0}}), invalid_input);
  std::size_t dup = 0;
  const std::vector<std::pair<vertex_id, vertex_id>> e{{0, 1}, {1, 0}};
  EXPECT_EQ(Graph::from_edges(2, e, &dup).num_edges(), 1u);
  EXPECT_EQ(dup, 1u);
}

TEST(Graph, OpenNeighborhoods) {
  const auto k2 = neighborhood_hypergraph(fx::path(2), false);
  EXPECT_EQ(k2.edges(), (std::vector<Edge>{{1}, {0}}));
  const auto two = neighborhood_hypergraph(Graph(2), false);
  EXPECT_EQ(two.edges(), (std::vector<Edge>{{}, {}}));
  EXPECT_TRUE(two.has_repeated_edges());
  EXPECT_TRUE(two.has_empty_edge());
}

TEST(Graph, Twins) {
  const auto tw = find_twins(fx::star(3), false);
  ASSERT_TRUE(tw);
  EXPECT_EQ(*tw, (std::pair<vertex_id, vertex_id>{1, 2}));
  EXPECT_FALSE(find_twins(fx::path(4), true));
  EXPECT_TRUE(find_twins(fx::path(2), true));
}

// ---------------------------------------------------------------- io

TEST(Io, ParseGraph) {
  const auto p = parse_graph("p graph 4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(p.graph, fx::path(4));
  EXPECT_TRUE(p.warnings.empty());
}

TEST(Io, ParseGraphOneBased) {
  const auto p = parse_graph("# one-based\np graph 4 3 1\n1 2\n2 3   # middle\n\n3 4\n");
  EXPECT_EQ(p.graph, fx::path(4));
}

TEST(Io, SelfLoopNamesLine) {
  try {
    parse_graph("p graph 3 2\n0 1\n2 2\n");
    FAIL() << "expected a parse error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Io, EmptyEdgeSection) {
  const auto p = parse_graph("p graph 3 0\n");
  EXPECT_EQ(p.graph.num_vertices(), 3u);
  EXPECT_EQ(p.graph.num_edges(), 0u);
}

TEST(Io, DuplicateGraphEdgeWarns) {
  const auto p = parse_graph("p graph 3 2\n0 1\n1 0\n");
  EXPECT_EQ(p.graph.num_edges(), 1u);
  EXPECT_EQ(p.warnings.size(), 1u);
}

TEST(Io, MalformedLines) {
  EXPECT_THROW(parse_graph("p graph 3 1\n0 x\n"), parse_error);
  EXPECT_THROW(parse_graph("p graph 3 1\n0 1 2\n"), parse_error);
  EXPECT_THROW(parse_graph("p graph 3 2\n0 1\n"), parse_error);
  EXPECT_THROW(parse_graph("p graph 3 1\n0 1\n1 2\n"), parse_error);
  EXPECT_THROW(parse_graph("graph 3 1\n0 1\n"), parse_error);
  EXPECT_THROW(parse_graph("p hgraph 3 1\n0 1\n"), parse_error);
  EXPECT_THROW(parse_graph("p graph 3 1 2\n0 1\n"), parse_error);
  EXPECT_THROW(parse_graph("p graph 3 1 1\n0 1\n"), parse_error);
}

TEST(Io, ParseHypergraph) {
  const auto p = parse_hypergraph("p hgraph 3 3\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(p.hypergraph, fx::tri());
}

TEST(Io, HypergraphDuplicates) {
  const std::string text = "p hgraph 3 3\n0 1\n1 0\n2\n";
  const auto p = parse_hypergraph(text);
  EXPECT_EQ(p.hypergraph.num_edges(), 2u);
  ASSERT_EQ(p.warnings.size(), 1u);
  const auto q = parse_hypergraph(text, true);
  EXPECT_EQ(q.hypergraph.num_edges(), 3u);
  EXPECT_TRUE(q.warnings.empty());
}

TEST(Io, HypergraphVertexOutOfRange) {
  EXPECT_THROW(parse_hypergraph("p hgraph 3 1\n0 3\n"), parse_error);
}

TEST(Io, DetectFormat) {
  std::istringstream a("# c\np hgraph 1 0\n"), b("p graph 1 0\n");
  EXPECT_EQ(detect_format(a), InstanceFormat::hypergraph);
  EXPECT_EQ(detect_format(b), InstanceFormat::graph);
}

TEST(Io, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto g = fx::random_graph(rng, 0, 15);
    EXPECT_EQ(parse_graph(serialize_graph(g)).graph, g);
    const auto h = fx::random_small(rng, 10, 30, i % 2 == 0);
    EXPECT_EQ(parse_hypergraph(serialize_hypergraph(h), !(i % 2 == 0)).hypergraph, h);
  }
}

TEST(Io, SerializeRejectsInexpressible) {
  EXPECT_THROW(serialize_hypergraph(restriction(fx::tri(), std::vector<vertex_id>{0})), invalid_input);
  EXPECT_THROW(serialize_hypergraph(Hypergraph(2, {{}}, false)), invalid_input);
}

// ---------------------------------------------------------------- generators

TEST(Generate, TreeDeterministic) {
  const auto a = random_tree(10, 1), b = random_tree(10, 1);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(is_tree(a));
  EXPECT_EQ(a.num_vertices(), 10u);
  for (std::size_t n = 1; n < 40; ++n) EXPECT_TRUE(is_tree(random_tree(n, n)));
}

TEST(Generate, GnpEdgeless) {
  EXPECT_EQ(random_gnp(5, 0.0, 3).num_edges(), 0u);
  EXPECT_EQ(random_gnp(5, 1.0, 3).num_edges(), 10u);
  EXPECT_THROW(random_gnp(5, 1.5, 3), invalid_input);
}

TEST(Generate, HypergraphCapacity) {
  EXPECT_THROW(random_hypergraph(3, 8, 3, 1), invalid_input);
  const auto h = random_hypergraph(3, 7, 3, 1);
  EXPECT_EQ(h.num_edges(), 7u);
  EXPECT_FALSE(h.has_repeated_edges());
  EXPECT_EQ(random_hypergraph(20, 50, 5, 9), random_hypergraph(20, 50, 5, 9));
}
