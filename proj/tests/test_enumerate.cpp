#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "edgering/enumerate.hpp"
#include "oracles.hpp"

using namespace edgering;

TEST(Enumerate, ConnectedClassCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(connected_graphs_up_to_isomorphism(n).size(), expected[n - 1]) << n;
  }
}

TEST(Enumerate, AllClassCounts) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(graphs_up_to_isomorphism(n).size(), expected[n - 1]) << n;
}

TEST(Enumerate, LabeledCounts) {
  const std::vector<std::size_t> expected{1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for_each_connected_labeled_graph(n, [&](const Graph&) { ++count; });
    EXPECT_EQ(count, expected[n - 1]) << n;
    EXPECT_EQ(oracle::connected_labeled_graphs(n).size(), expected[n - 1]);
  }
}

TEST(Enumerate, LabeledGraphsCollapseToClasses) {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const Graph& g : oracle::connected_labeled_graphs(n)) codes.insert(canonical_code(g));
    std::set<std::uint64_t> reps;
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) reps.insert(canonical_code(g));
    EXPECT_EQ(codes, reps) << n;
  }
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const int d = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(d, 0.45, rng);
    std::vector<Vertex> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(g), canonical_code(relabel(g, perm))) << render_graph(g);
  }
}

TEST(CanonicalCode, RoundTripThroughCode) {
  for (const Graph& g : connected_graphs_up_to_isomorphism(6)) {
    EXPECT_EQ(canonical_code(graph_from_code(6, canonical_code(g))), canonical_code(g));
  }
}
