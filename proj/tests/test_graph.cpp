#include <gtest/gtest.h>

#include <random>

#include "edgering/graph.hpp"
#include "oracles.hpp"

using namespace edgering;

namespace {

Graph k3() { return Graph(3, {{1, 2}, {2, 3}, {1, 3}}); }
Graph c4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

}  // namespace

TEST(ParseGraph, Triangle) { EXPECT_EQ(parse_graph("3 3\n1 2\n2 3\n1 3\n"), k3()); }

TEST(ParseGraph, FourCycle) { EXPECT_EQ(parse_graph("4 4\n1 2\n2 3\n3 4\n4 1\n"), c4()); }

TEST(ParseGraph, LoopIsRejected) { EXPECT_THROW(parse_graph("2 1\n1 1\n"), ParseError); }

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  try {
    parse_graph("3 2\n1 2\n\n2 9\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_graph("3 3\n1 2\n2 3\n"), ParseError);
  EXPECT_THROW(parse_graph("x y\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(ParseGraph, CommentsAndDuplicates) {
  EXPECT_EQ(parse_graph("# tri\n3 4\n1 2\n2 3\n\n1 3\n3 1\n"), k3());
}

TEST(ParseGraph, RoundTripOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const int d = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(d, 0.4, rng);
    EXPECT_EQ(parse_graph(render_graph(g)), g);
  }
}

TEST(Bipartite, Examples) {
  const auto c = is_bipartite(c4());
  ASSERT_TRUE(c);
  EXPECT_EQ(c->left, (VertexSet{1, 3}));
  EXPECT_EQ(c->right, (VertexSet{2, 4}));
  EXPECT_FALSE(is_bipartite(k3()));
  const auto s = is_bipartite(make_family({family::Star{5}}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->left, (VertexSet{1}));
  EXPECT_EQ(s->right, (VertexSet{2, 3, 4, 5}));
}

TEST(Bipartite, AgreesWithCycleSearch) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::connected_labeled_graphs(n)) {
      ASSERT_EQ(is_bipartite(g).has_value(), !oracle::has_odd_cycle(g)) << render_graph(g);
    }
  }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 400; ++t) {
    const Graph g = oracle::random_graph(7, 0.35, rng);
    ASSERT_EQ(is_bipartite(g).has_value(), !oracle::has_odd_cycle(g)) << render_graph(g);
  }
}

TEST(Components, Examples) {
  const auto parts = connected_components(k3(), VertexSet{1, 2});
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(parts[0], (VertexSet{1, 2}));

  const Graph t = make_family({family::TwoTrianglesPath{1}});
  const auto split = connected_components(t, t.vertices() - VertexSet{3, 4});
  EXPECT_EQ(split.size(), 2U);

  const Graph empty(3, std::span<const Edge>{});
  EXPECT_EQ(connected_components(empty),
            (std::vector<VertexSet>{VertexSet{1}, VertexSet{2}, VertexSet{3}}));
}

TEST(Components, PartitionTheVertexSet) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.2, rng);
    VertexSet seen;
    for (VertexSet c : connected_components(g)) {
      EXPECT_TRUE((seen & c).empty());
      seen = seen | c;
    }
    EXPECT_EQ(seen, g.vertices());
  }
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(make_family({family::Complete{4}}), VertexSet{1, 2, 3}).graph, k3());
  EXPECT_EQ(induced_subgraph(c4(), VertexSet{1, 2}).graph, Graph(2, {{1, 2}}));
  const auto apart = induced_subgraph(c4(), VertexSet{1, 3});
  EXPECT_EQ(apart.graph.num_edges(), 0U);
  EXPECT_EQ(apart.original, (std::vector<Vertex>{1, 3}));
}

TEST(Families, Examples) {
  EXPECT_EQ(make_family({family::Complete{4}}).num_edges(), 6U);
  const Graph kb = make_family({family::CompleteBipartite{2, 2}});
  EXPECT_EQ(kb.num_edges(), 4U);
  for (Vertex v = 1; v <= 4; ++v) EXPECT_EQ(kb.degree(v), 2);
  EXPECT_TRUE(is_connected(kb));

  const Graph t = make_family({family::TwoTrianglesPath{1}});
  EXPECT_EQ(t.num_vertices(), 6);
  EXPECT_EQ(t.num_edges(), 7U);
}

TEST(Families, AttachPathAddsVerticesAndEdges) {
  const Graph g = make_family(attach_path({family::Complete{4}}, 1, 2));
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 8U);
  EXPECT_TRUE(g.adjacent(1, 5));
  EXPECT_TRUE(g.adjacent(5, 6));
  EXPECT_EQ(g.degree(6), 1);
}

TEST(Families, TwoTrianglesAreDisjointForLongPaths) {
  for (int l = 2; l <= 5; ++l) {
    const Graph g = make_family({family::TwoTrianglesPath{l}});
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(is_bipartite(g));
    int triangles = 0;
    std::vector<VertexSet> found;
    const int d = g.num_vertices();
    for (int a = 1; a <= d; ++a) {
      for (int b = a + 1; b <= d; ++b) {
        for (int c = b + 1; c <= d; ++c) {
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) {
            ++triangles;
            found.push_back(VertexSet{a, b, c});
          }
        }
      }
    }
    ASSERT_EQ(triangles, 2);
    EXPECT_TRUE((found[0] & found[1]).empty());
  }
}

TEST(Families, SpecStringsRoundTrip) {
  for (const char* s : {"complete:4", "complete_bipartite:3,3", "cycle:5", "path:4", "star:5",
                        "two_triangles_path:2", "complete:4+path:1:2",
                        "complete_bipartite:2,2+path:1:2+path:3:1"}) {
    EXPECT_EQ(describe(parse_family(s)), s);
  }
  EXPECT_THROW(parse_family("complete:"), std::invalid_argument);
  EXPECT_THROW(parse_family("wheel:5"), std::invalid_argument);
  EXPECT_THROW(make_family(parse_family("complete:4+path:9:1")), std::invalid_argument);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{1, 4}}), std::invalid_argument);
  EXPECT_EQ(Graph(3, {{2, 1}, {1, 2}}).num_edges(), 1U);
}
