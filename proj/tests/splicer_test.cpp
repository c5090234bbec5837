#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "splicers/errors.hpp"
#include "splicers/generators.hpp"
#include "splicers/splicer.hpp"

using namespace splicers;

TEST(Splicer, UnionBookkeeping) {
  const Graph g = complete_graph(20);
  for (const std::size_t k : {1u, 2u, 5u}) {
    const Splicer u = splice(g, k, Seed(k));
    EXPECT_EQ(u.k, k);
    EXPECT_EQ(u.source_trees.size(), k);
    EXPECT_LE(u.support.num_edges(), k * 19);
    EXPECT_EQ(std::accumulate(u.multiplicity.begin(), u.multiplicity.end(), std::size_t{0}), k * 19);
    EXPECT_TRUE(u.support.is_connected());
    for (EdgeId e = 0; e < u.support.num_edges(); ++e) {
      EXPECT_EQ(u.support.edge(e), g.edge(u.base_edge[e]));
    }
  }
}

TEST(Splicer, KOneIsTheTree) {
  const Graph g = petersen_graph();
  const Splicer u = splice(g, 1, Seed(3));
  EXPECT_EQ(u.support.num_edges(), 9u);
}

TEST(Splicer, TreesOfATreeCollapse) {
  const Splicer u = splice(path_graph(7), 4, Seed(1));
  EXPECT_EQ(u.support.num_edges(), 6u);
  for (const auto m : u.multiplicity) EXPECT_EQ(m, 4u);
}

TEST(Splicer, RejectsEmptyOrMismatched) {
  EXPECT_THROW(union_trees({}), InvalidArgument);
  auto a = sample_trees(complete_graph(4), 1, Seed(1));
  auto b = sample_trees(complete_graph(5), 1, Seed(1));
  a.push_back(b.front());
  EXPECT_THROW(union_trees(a), InvalidArgument);
}

TEST(WeightedGraph, Validation) {
  EXPECT_THROW(WeightedGraph(path_graph(3), {1.0}), InvalidArgument);
  EXPECT_THROW(WeightedGraph(path_graph(3), {1.0, 0.0}), InvalidArgument);
  const WeightedGraph w(path_graph(3), {1.5, 2.5});
  EXPECT_DOUBLE_EQ(w.total_weight(), 4.0);
  EXPECT_DOUBLE_EQ(w.cut_weight(VertexSubset(3, std::vector<Vertex>{1})), 4.0);
}

TEST(Sparsify, UniformWeightAndSize) {
  const std::size_t n = 200;
  const double p = std::min(1.0, 10 * std::log(n) / n);
  Graph h = gnp_graph(n, p, Seed(4));
  ASSERT_TRUE(h.is_connected());
  const auto r = sparsify_gnp(h, p, Seed(5));
  EXPECT_LE(r.sparsifier.graph.num_edges(), 2 * (n - 1));
  EXPECT_GE(r.attempts, 1u);
  for (const double w : r.sparsifier.weight) EXPECT_DOUBLE_EQ(w, p * n);
  const std::vector<Vertex> a{0, 1, 2, 3};
  const VertexSubset s(n, a);
  EXPECT_DOUBLE_EQ(r.sparsifier.cut_weight(s), p * n * static_cast<double>(cut_size(r.sparsifier.graph, s)));
}

TEST(Sparsify, DisconnectedInputRejected) {
  EXPECT_THROW(sparsify_gnp(Graph(4, {{0, 1}, {2, 3}}), 0.5, Seed(1)), InvalidArgument);
}
