#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "splicers/errors.hpp"
#include "splicers/generators.hpp"
#include "splicers/linalg.hpp"
#include "splicers/tree_sampler.hpp"

using namespace splicers;

TEST(AldousBroder, EverySampleIsAValidTree) {
  const Graph graphs[] = {complete_graph(8), petersen_graph(), cycle_with_chord(7), random_regular_graph(40, 3, Seed(1))};
  for (const auto& g : graphs) {
    for (std::uint64_t s = 0; s < 50; ++s) {
      WalkOptions options;
      options.start = static_cast<Vertex>(s % g.num_vertices());
      const auto sample = aldous_broder(g, Seed(s), options);
      EXPECT_TRUE(validate_tree(g, sample.tree, &sample.trace).empty());
      EXPECT_EQ(sample.tree.root, options.start);
      EXPECT_EQ(sample.trace.visits.size(), sample.trace.steps + 1);
    }
  }
}

TEST(AldousBroder, Deterministic) {
  const Graph g = petersen_graph();
  EXPECT_EQ(aldous_broder(g, Seed(3)).tree.edges, aldous_broder(g, Seed(3)).tree.edges);
}

TEST(AldousBroder, RejectsDisconnectedAndBadStart) {
  EXPECT_THROW(aldous_broder(Graph(4, {{0, 1}, {2, 3}}), Seed(1)), SamplingFailure);
  WalkOptions options;
  options.start = 9;
  EXPECT_THROW(aldous_broder(cycle_graph(4), Seed(1), options), InvalidArgument);
}

TEST(AldousBroder, StepCapTrips) {
  WalkOptions options;
  options.step_cap = 3;
  EXPECT_THROW(aldous_broder(cycle_graph(50), Seed(1), options), SamplingFailure);
}

TEST(AldousBroder, TreeOfATreeIsItself) {
  const Graph g = path_graph(6);
  const auto sample = aldous_broder(g, Seed(5));
  EXPECT_EQ(sample.tree.sorted_edges(), (std::vector<EdgeId>{0, 1, 2, 3, 4}));
}

TEST(AldousBroder, InclusionFrequencyTracksResistance) {
  const Graph g = cycle_with_chord(6);
  const auto freq = edge_inclusion_frequencies(g, 20000, Seed(11));
  const auto r = effective_resistances(g);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const double se = std::sqrt(r[e] * (1 - r[e]) / 20000);
    EXPECT_NEAR(freq[e], r[e], 4 * se + 1e-12);
  }
  EXPECT_DOUBLE_EQ(edge_inclusion_probability(g, 0, 20000, Seed(11)), freq[0]);
}

TEST(ProcessB, StepWeightsSumToTotal) {
  for (std::size_t n = 3; n < 12; ++n) {
    for (std::size_t d = 1; d < n; ++d) {
      for (std::size_t d1 = 0; d1 < d; ++d1) {
        for (const auto rule : {RevisitRule::kPerArc, RevisitRule::kTotal}) {
          const auto w = process_b_step_weights(n, d, d1, rule);
          EXPECT_EQ(w.old_units * d1 + w.new_units * (d - d1), w.total);
        }
        // Per-arc rule: each traversed arc has probability 1/(n-1).
        const auto w = process_b_step_weights(n, d, d1);
        EXPECT_EQ(w.old_units * (n - 1), w.total);
      }
    }
  }
}

TEST(ProcessB, NeverFailsOnCompleteGraphWithPOne) {
  const Graph k = complete_graph(9);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto r = process_bp(k, 1.0, Seed(s));
    ASSERT_TRUE(r.succeeded());
    EXPECT_TRUE(validate_tree(k, r.sample().tree).empty());
    EXPECT_EQ(r.oriented.num_arcs(), 2 * k.num_edges());
  }
}

TEST(ProcessB, FailureReportsStuckVertex) {
  // A sparse orientation of a path leaves vertices with no out-arcs.
  const Graph g = path_graph(30);
  std::size_t failures = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto r = process_bp(g, 0.05, Seed(s));
    if (r.succeeded()) continue;
    ++failures;
    const auto stuck = r.failure().stuck;
    ASSERT_LT(stuck, g.num_vertices());
  }
  EXPECT_GT(failures, 0u);
}

TEST(ProcessB, TwoTreesOnCompleteGraph) {
  const Graph k = complete_graph(12);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto r = sequential_two_trees_bp(k, 1.0, Seed(s));
    ASSERT_TRUE(r.trees.has_value());
    EXPECT_TRUE(validate_tree(k, r.trees->first).empty());
    EXPECT_TRUE(validate_tree(k, r.trees->second).empty());
  }
}

TEST(ProcessB, UniformOnSmallCompleteGraph) {
  // p = 1 makes the walk a plain random walk on K_4: 16 trees, uniform.
  const Graph k = complete_graph(4);
  std::map<std::vector<EdgeId>, int> counts;
  const int trials = 32000;
  for (int i = 0; i < trials; ++i) ++counts[process_bp(k, 1.0, Seed(1).stream("t", i)).sample().tree.sorted_edges()];
  EXPECT_EQ(counts.size(), 16u);
  const double expected = trials / 16.0;
  for (const auto& [tree, c] : counts) EXPECT_NEAR(c, expected, 4 * std::sqrt(expected));
}
