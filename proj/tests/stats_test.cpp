#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "splicers/errors.hpp"
#include "splicers/generators.hpp"
#include "splicers/linalg.hpp"
#include "splicers/stats.hpp"

using namespace splicers;

namespace {

std::vector<Graph> enumerable_corpus() {
  return {complete_graph(4), cycle_graph(5), cycle_with_chord(5), wheel_graph(5), prism_graph(), complete_graph(5)};
}

}  // namespace

TEST(Enumeration, CountsMatchOracles) {
  EXPECT_EQ(enumerate_trees(complete_graph(4)).size(), 16u);
  EXPECT_EQ(enumerate_trees(cycle_graph(5)).size(), 5u);
  for (const auto& g : enumerable_corpus()) {
    const auto masks = enumerate_tree_masks(g);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(masks.size())), spanning_tree_count(g));
    EXPECT_EQ(masks.size(), oracle::all_spanning_trees(g).size());
    EXPECT_EQ(std::set<std::uint32_t>(masks.begin(), masks.end()).size(), masks.size());
  }
  EXPECT_THROW(enumerate_trees(complete_graph(7)), InvalidArgument);
}

TEST(Enumeration, TreesAreValid) {
  const Graph g = prism_graph();
  for (const auto& t : enumerate_trees(g)) EXPECT_TRUE(validate_tree(g, t).empty());
}

TEST(Enumeration, MarginalsEqualResistance) {
  for (const auto& g : enumerable_corpus()) {
    const auto marginals = exact_edge_marginals(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const double r = effective_resistance_exact(g, g.edge(e).u, g.edge(e).v).get_d();
      EXPECT_NEAR(marginals[e], r, 1e-9 * r);
    }
  }
}

TEST(NegativeCorrelation, K4DisjointPairIsEquality) {
  const Graph k = complete_graph(4);
  // {0,1} and {2,3} are disjoint.
  const std::vector<EdgeId> pair{*k.find_edge(0, 1), *k.find_edge(2, 3)};
  const auto r = negative_correlation_check(k, pair, 0, Seed(1));
  ASSERT_TRUE(r.exact);
  EXPECT_DOUBLE_EQ(r.inclusion.joint, 4.0 / 16);
  EXPECT_DOUBLE_EQ(r.inclusion.product, 0.25);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.trees, 16u);
}

TEST(NegativeCorrelation, ExactOnAllPairsOfCorpus) {
  for (const auto& g : enumerable_corpus()) {
    std::vector<std::vector<EdgeId>> pairs;
    for (EdgeId a = 0; a < g.num_edges(); ++a) {
      for (EdgeId b = a + 1; b < g.num_edges(); ++b) pairs.push_back({a, b});
    }
    for (const auto& r : negative_correlation_checks(g, pairs, 0, Seed(1))) EXPECT_TRUE(r.holds());
  }
}

TEST(NegativeCorrelation, TriplesAndSingles) {
  const Graph g = wheel_graph(5);
  const std::vector<EdgeId> single{0};
  const auto one = negative_correlation_check(g, single, 0, Seed(1));
  EXPECT_DOUBLE_EQ(one.inclusion.joint, one.inclusion.product);
  const std::vector<EdgeId> triple{0, 3, 5};
  EXPECT_TRUE(negative_correlation_check(g, triple, 0, Seed(1)).holds());
  EXPECT_THROW(negative_correlation_check(g, std::vector<EdgeId>{}, 0, Seed(1)), InvalidArgument);
  EXPECT_THROW(negative_correlation_check(g, std::vector<EdgeId>{0, 1, 2, 3, 4}, 0, Seed(1)), InvalidArgument);
}

TEST(NegativeCorrelation, MonteCarloAgreesWithExact) {
  const Graph g = prism_graph();
  const std::vector<EdgeId> pair{0, 1};
  const auto exact = negative_correlation_check(g, pair, 0, Seed(1), CorrelationMode::kExact);
  const auto mc = negative_correlation_check(g, pair, 50000, Seed(2), CorrelationMode::kMonteCarlo);
  ASSERT_FALSE(mc.exact);
  EXPECT_GT(mc.inclusion.standard_error, 0.0);
  EXPECT_NEAR(mc.inclusion.joint - mc.inclusion.product, exact.inclusion.joint - exact.inclusion.product,
              4 * mc.inclusion.standard_error);
  EXPECT_NEAR(mc.exclusion.joint - mc.exclusion.product, exact.exclusion.joint - exact.exclusion.product,
              4 * mc.exclusion.standard_error);
  EXPECT_TRUE(mc.holds());
}

TEST(TailCheck, CompleteGraphMeanProbability) {
  const Graph k = complete_graph(16);
  std::vector<Vertex> half{0, 1, 2, 3, 4, 5, 6, 7};
  const auto r = chernoff_tail_check(k, VertexSubset(16, half), 10000, Seed(3));
  EXPECT_EQ(r.cut_edges, 64u);
  EXPECT_NEAR(r.mean_probability, 2.0 / 16, 4 * r.mean_probability_se);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.points.size(), 4u);
}

TEST(TailCheck, LambdaZeroBoundIsOne) {
  const Graph g = petersen_graph();
  const double grid[] = {0.0};
  const auto r = chernoff_tail_check(g, VertexSubset(10, std::vector<Vertex>{0, 1, 2}), 10000, Seed(1), grid);
  EXPECT_DOUBLE_EQ(r.points.front().bound, 1.0);
  EXPECT_TRUE(r.holds());
  EXPECT_THROW(chernoff_tail_check(g, VertexSubset(10, std::vector<Vertex>{0}), 100, Seed(1)), InvalidArgument);
}

TEST(MinEdge, CompleteAndBridges) {
  const auto r = min_tree_edge_probability(complete_graph(4), 100000, Seed(1));
  EXPECT_NEAR(r.probability, 0.5, 0.01);
  // A triangle with a pendant vertex: the bridge is always in the tree.
  const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto freq = edge_inclusion_frequencies(g, 2000, Seed(2));
  EXPECT_DOUBLE_EQ(freq[3], 1.0);
  EXPECT_NE(min_tree_edge_probability(g, 2000, Seed(2)).edge, 3u);
}

TEST(Pruefer, BijectionOnK5) {
  const Graph k = complete_graph(5);
  std::set<std::uint64_t> seen;
  for (const auto& t : enumerate_trees(k)) {
    std::vector<Edge> edges;
    for (const EdgeId e : t.edges) edges.push_back(k.edge(e));
    const auto idx = pruefer_index(5, edges);
    EXPECT_LT(idx, 125u);
    seen.insert(idx);
  }
  EXPECT_EQ(seen.size(), 125u);
}

TEST(Coupling, POneHasNoFailures) {
  const auto r = coupling_distance_estimate(6, 1.0, 20000, Seed(4));
  EXPECT_EQ(r.failure_rate, 0.0);
  ASSERT_TRUE(r.tv_to_uniform.has_value());
  // 1296 outcomes and 2*10^4 draws: expected TV about 0.1, never near 1.
  EXPECT_LT(*r.tv_to_uniform, 0.2);
  EXPECT_FALSE(coupling_distance_estimate(10, 1.0, 10, Seed(4)).tv_to_uniform.has_value());
}

TEST(LowerBoundEvent, SyntheticTraces) {
  PathGadget gadget{{5}, {2, 3, 4}};
  WalkTrace trace;
  auto set = [&](std::vector<Vertex> visits) {
    trace.visits = visits;
    trace.steps = visits.size() - 1;
    trace.first_visit.assign(8, ~std::uint64_t{0} >> 1);
    for (std::size_t i = visits.size(); i-- > 0;) trace.first_visit[visits[i]] = i;
  };
  set({0, 3, 4, 2, 5, 1});
  EXPECT_TRUE(lower_bound_event(trace, gadget));
  set({0, 3, 2, 4, 5, 1});  // other direction around the cycle
  EXPECT_TRUE(lower_bound_event(trace, gadget));
  set({0, 3, 0, 4, 2, 5});  // leaves the cycle
  EXPECT_FALSE(lower_bound_event(trace, gadget));
  set({0, 3, 4, 3, 2, 5});  // repeats a vertex
  EXPECT_FALSE(lower_bound_event(trace, gadget));
  set({0, 3, 4, 2, 1, 5});  // exits before the path
  EXPECT_FALSE(lower_bound_event(trace, gadget));
}

TEST(LowerBoundEvent, HitsCutThePathOffByOneEdge) {
  const auto family = lower_bound_family(600, 3, 1, Seed(1));
  const auto r = measure_lower_bound_events(family, 200, Seed(2));
  EXPECT_EQ(r.observations, 200 * family.gadgets.size());
  EXPECT_GT(r.hits, 0u);
  EXPECT_EQ(r.hits_with_single_edge_cut, r.hits);
  EXPECT_DOUBLE_EQ(r.bound, 1.0 / 125);
}
