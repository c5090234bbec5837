#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "splicers/errors.hpp"
#include "splicers/generators.hpp"
#include "splicers/linalg.hpp"

using namespace splicers;

TEST(MatrixTree, KnownCounts) {
  EXPECT_EQ(spanning_tree_count(complete_graph(4)), 16);
  EXPECT_EQ(spanning_tree_count(complete_graph(7)), 16807);  // 7^5
  EXPECT_EQ(spanning_tree_count(cycle_graph(5)), 5);
  EXPECT_EQ(spanning_tree_count(Graph(4, {{0, 1}, {2, 3}})), 0);
}

TEST(MatrixTree, MatchesRationalEliminationOracle) {
  EXPECT_EQ(spanning_tree_count(petersen_graph()), 2000);
  for (const Graph& g : {petersen_graph(), wheel_graph(6), prism_graph(), random_regular_graph(16, 3, Seed(2))}) {
    EXPECT_EQ(mpq_class(spanning_tree_count(g)), oracle::tree_count(g));
  }
}

TEST(MatrixTree, Bareiss) {
  std::vector<std::vector<mpz_class>> m{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(bareiss_determinant(m), 4);
  std::vector<std::vector<mpz_class>> swap{{0, 1}, {1, 0}};
  EXPECT_EQ(bareiss_determinant(swap), -1);
}

TEST(Resistance, ClosedForms) {
  const Graph k = complete_graph(10);
  for (EdgeId e = 0; e < k.num_edges(); ++e) EXPECT_NEAR(effective_resistance(k, e), 0.2, 1e-12);
  EXPECT_EQ(effective_resistance_exact(cycle_graph(5), 0, 1), mpq_class(4, 5));
  EXPECT_EQ(effective_resistance_exact(path_graph(4), 0, 3), 3);
}

TEST(Resistance, ExactMatchesOracle) {
  const Graph g = petersen_graph();
  for (const auto& e : g.edges()) EXPECT_EQ(effective_resistance_exact(g, e.u, e.v), oracle::resistance(g, e.u, e.v));
}

TEST(Resistance, FosterSumOnBothPaths) {
  // Exact path for small graphs, sparse solver above the limit.
  for (const std::size_t n : {20u, 40u, 200u}) {
    const Graph g = random_regular_graph(n, 3, Seed(n));
    const auto r = effective_resistances(g);
    EXPECT_NEAR(std::accumulate(r.begin(), r.end(), 0.0), static_cast<double>(n - 1), 1e-8);
  }
}

TEST(Resistance, SparseSolverAgreesWithAllEdges) {
  const Graph g = random_regular_graph(100, 4, Seed(3));
  const auto all = effective_resistances(g);
  for (EdgeId e = 0; e < g.num_edges(); e += 17) EXPECT_NEAR(effective_resistance(g, e), all[e], 1e-10);
}

TEST(Resistance, DisconnectedThrows) {
  EXPECT_THROW(effective_resistance_exact(Graph(4, {{0, 1}, {2, 3}}), 0, 1), InvalidArgument);
}
