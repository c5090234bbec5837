#include <gtest/gtest.h>

#include "splicers/errors.hpp"
#include "splicers/generators.hpp"
#include "splicers/route_sim.hpp"

using namespace splicers;

namespace {

SpanningTree tree_of(const Graph& g, Vertex root = 0) {
  WalkOptions options;
  options.start = root;
  return aldous_broder(g, Seed(1), options).tree;
}

}  // namespace

TEST(Routing, PathTreeNextHops) {
  const Graph g = path_graph(5);
  const auto state = build_routing(g, {tree_of(g)});
  EXPECT_EQ(state.next_hop(0, 4, 1), 2u);
  EXPECT_EQ(state.next_hop(0, 0, 3), 2u);
  EXPECT_EQ(state.next_hop(0, 2, 2), kNoVertex);
}

TEST(Routing, StarTreeGoesThroughCenter) {
  const Graph g = star_graph(6);
  const auto state = build_routing(g, {tree_of(g, 3)});
  for (Vertex dst = 1; dst < 7; ++dst) {
    for (Vertex v = 1; v < 7; ++v) {
      if (v != dst) EXPECT_EQ(state.next_hop(0, dst, v), 0u);
    }
  }
}

TEST(Routing, DefinedEntryCount) {
  const Graph g = complete_graph(12);
  const auto state = build_routing(g, sample_trees(g, 3, Seed(2)));
  EXPECT_EQ(state.defined_entries(), 3u * 12 * 11);
}

TEST(Routing, NoFailuresDeliversAlongTree) {
  const Graph g = petersen_graph();
  const auto tree = tree_of(g);
  const auto state = build_routing(g, {tree});
  const Graph t = edge_subgraph(g, tree.edges);
  for (Vertex s = 0; s < 10; ++s) {
    const auto dist = bfs_distances(t, s);
    for (Vertex d = 0; d < 10; ++d) {
      if (s == d) continue;
      const auto r = route(state, s, d, SwitchPolicy::kRandomOrder, Seed(s * 10 + d));
      EXPECT_TRUE(r.delivered);
      EXPECT_EQ(r.hops, static_cast<std::size_t>(dist[d]));
      EXPECT_EQ(r.switches, 0u);
      EXPECT_EQ(r.path.back(), d);
    }
  }
}

TEST(Routing, SwitchesToHealthyTree) {
  const Graph g = complete_graph(10);
  const auto trees = sample_trees(g, 2, Seed(3));
  auto state = build_routing(g, trees);
  std::vector<char> failed(g.num_edges(), 0);
  for (const EdgeId e : trees[0].edges) failed[e] = 1;
  for (const EdgeId e : trees[1].edges) failed[e] = 0;
  state.set_failures(failed);
  for (Vertex d = 1; d < 10; ++d) {
    for (const auto policy : {SwitchPolicy::kRandomOrder, SwitchPolicy::kRoundRobin}) {
      const auto r = route(state, 0, d, policy, Seed(d));
      EXPECT_TRUE(r.delivered);
      if (failed[trees[0].edges.empty() ? 0 : state.next_edge(0, d, 0)]) EXPECT_GE(r.switches, 1u);
      for (std::size_t i = 0; i + 1 < r.path.size(); ++i) EXPECT_FALSE(failed[*g.find_edge(r.path[i], r.path[i + 1])]);
    }
  }
}

TEST(Routing, BlockedAtSource) {
  const Graph g = complete_graph(8);
  auto state = build_routing(g, sample_trees(g, 2, Seed(4)));
  std::vector<char> failed(g.num_edges(), 0);
  failed[state.next_edge(0, 5, 0)] = 1;
  failed[state.next_edge(1, 5, 0)] = 1;
  state.set_failures(failed);
  const auto r = route(state, 0, 5, SwitchPolicy::kRandomOrder, Seed(1));
  EXPECT_FALSE(r.delivered);
  EXPECT_EQ(r.hops, 0u);
}

TEST(Routing, ArgumentChecks) {
  const Graph g = complete_graph(5);
  const auto state = build_routing(g, sample_trees(g, 1, Seed(1)));
  EXPECT_THROW(route(state, 1, 1, SwitchPolicy::kRandomOrder, Seed(1)), InvalidArgument);
  EXPECT_THROW(route(state, 0, 1, SwitchPolicy::kRandomOrder, Seed(1), 0), InvalidArgument);
}

TEST(Reliability, Extremes) {
  const Graph g = complete_graph(20);
  const auto none = reliability_experiment(g, 2, 0.0, 50, 3, Seed(1));
  EXPECT_DOUBLE_EQ(none.delivered_fraction, 1.0);
  const auto all = reliability_experiment(g, 2, 1.0, 50, 3, Seed(1));
  EXPECT_DOUBLE_EQ(all.delivered_fraction, 0.0);
  EXPECT_DOUBLE_EQ(all.ceiling_fraction, 0.0);
}

TEST(Reliability, NeverAboveCeiling) {
  const auto r = reliability_experiment(random_regular_graph(40, 3, Seed(1)), 3, 0.2, 100, 10, Seed(2));
  EXPECT_TRUE(r.never_above_ceiling);
  for (const auto& row : r.rows) EXPECT_LE(row.delivered_fraction, row.ceiling_fraction);
  EXPECT_NE(reliability_csv(r).find("seed,failure_prob,delivered_fraction"), std::string::npos);
}

TEST(Stretch, IdentityAndDiameter) {
  const Graph g = cycle_graph(9);
  const Splicer whole = union_trees(sample_trees(g, 30, Seed(1)));
  ASSERT_EQ(whole.support.num_edges(), 9u);  // 30 trees cover every edge of C_9
  const auto r = stretch_stats(g, whole, 100, Seed(2));
  EXPECT_DOUBLE_EQ(r.mean_stretch, 1.0);
  EXPECT_EQ(r.diameter, 4u);
  EXPECT_EQ(diameter(path_graph(7)), 6u);
}
