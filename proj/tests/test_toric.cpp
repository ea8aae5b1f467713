#include <gtest/gtest.h>

#include "edgering/ehrhart.hpp"
#include "edgering/toric.hpp"
#include "oracles.hpp"

using namespace edgering;

namespace {

Graph fam(const char* s) { return make_family(parse_family(s)); }

std::uint64_t multisets(std::uint64_t n, int q) {
  return static_cast<std::uint64_t>(binomial(static_cast<std::int64_t>(n) + q - 1, q));
}

}  // namespace

TEST(Fibers, Examples) {
  for (int q = 1; q <= 4; ++q) EXPECT_TRUE(fibers(fam("complete:3"), q).empty());
  const auto c4 = fibers(fam("cycle:4"), 2);
  ASSERT_EQ(c4.size(), 1U);
  EXPECT_EQ(c4[0].multidegree, (IntVector{1, 1, 1, 1}));
  EXPECT_EQ(c4[0].monomials.size(), 2U);
}

TEST(Fibers, DegreeFourBinomialOfTheBridgedTriangles) {
  const Graph g = fam("two_triangles_path:1");
  bool found = false;
  for (const Fiber& f : fibers(g, 4)) {
    if (f.monomials.size() == 2 && fiber_components(f) == 2) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Fibers, MonomialsPartitionByImage) {
  // Every degree-q monomial lands in exactly one fiber; singleton fibers are
  // the distinct sums not reported.
  for (const char* s : {"complete:4", "cycle:6", "two_triangles_path:2"}) {
    const Graph g = fam(s);
    for (int q = 1; q <= 4; ++q) {
      const auto fs = fibers(g, q);
      std::uint64_t in_fibers = 0;
      for (const Fiber& f : fs) {
        in_fibers += f.monomials.size();
        for (const auto& m : f.monomials) {
          IntVector x(g.num_vertices(), 0);
          for (int k : m) {
            ++x[g.edges()[k].u - 1];
            ++x[g.edges()[k].v - 1];
          }
          ASSERT_EQ(x, f.multidegree);
        }
      }
      const std::uint64_t images = oracle::edge_sums(g, q).size();
      EXPECT_EQ(multisets(g.num_edges(), q), in_fibers + (images - fs.size())) << s << " " << q;
    }
  }
}

TEST(Generators, Examples) {
  EXPECT_EQ(minimal_generator_degrees(fam("cycle:4"), 4).degrees, (std::vector<int>{2}));
  EXPECT_TRUE(minimal_generator_degrees(fam("complete:3"), 4).degrees.empty());
  EXPECT_EQ(minimal_generator_degrees(fam("complete:4"), 4).degrees, (std::vector<int>{2, 2}));
  for (int l = 1; l <= 4; ++l) {
    const Graph g = make_family({family::TwoTrianglesPath{l}});
    const GeneratorProfile p = minimal_generator_degrees(g, l + 4);
    EXPECT_EQ(p.degrees, (std::vector<int>{l + 3})) << l;
    EXPECT_EQ(p.complete_up_to, l + 4);
  }
}

TEST(Generators, AgreeWithLinearAlgebraOracle) {
  struct Case {
    const char* spec;
    int q_max;
  };
  for (const Case c : {Case{"cycle:4", 4}, Case{"complete:4", 4}, Case{"cycle:6", 4},
                       Case{"complete_bipartite:2,3", 4}, Case{"two_triangles_path:1", 5},
                       Case{"complete:5", 3}}) {
    const Graph g = fam(c.spec);
    const GeneratorProfile p = minimal_generator_degrees(g, c.q_max);
    for (int q = 2; q <= c.q_max; ++q) {
      const auto n = std::count(p.degrees.begin(), p.degrees.end(), q);
      EXPECT_EQ(n, oracle::toric_generators_in_degree(g, q)) << c.spec << " q=" << q;
    }
  }
}

TEST(PrincipalRegularity, Examples) {
  EXPECT_EQ(principal_regularity(fam("two_triangles_path:2"), 9), 4);
  EXPECT_EQ(principal_regularity(fam("cycle:4"), 6), 1);
  EXPECT_EQ(principal_regularity(fam("complete:4"), 4), std::nullopt);
  EXPECT_EQ(principal_regularity(fam("complete:3"), 4), std::nullopt);
}

TEST(Budget, GuardTrips) {
  ToricBudget tiny{100};
  EXPECT_THROW(fibers(fam("complete:6"), 4, tiny), BudgetExceeded);
  EXPECT_THROW(minimal_generator_degrees(fam("cycle:4"), 1), std::invalid_argument);
}
