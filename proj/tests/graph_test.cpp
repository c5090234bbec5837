#include <gtest/gtest.h>

#include <vector>

#include "splicers/errors.hpp"
#include "splicers/generators.hpp"
#include "splicers/graph.hpp"

using namespace splicers;

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
}

TEST(Graph, NormalizesAndSortsAdjacency) {
  const Graph g(4, {{3, 0}, {2, 0}, {1, 0}});
  EXPECT_EQ(g.edge(0), (Edge{0, 3}));
  const auto nb = g.neighbors(0);
  ASSERT_EQ(nb.size(), 3u);
  EXPECT_EQ(nb[0].neighbor, 1u);
  EXPECT_EQ(nb[2].neighbor, 3u);
  EXPECT_EQ(nb[2].edge, 0u);
  EXPECT_EQ(g.find_edge(3, 0), EdgeId{0});
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.max_degree(), 3u);
  EXPECT_EQ(g.min_degree(), 1u);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(cycle_graph(5).is_connected());
  EXPECT_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
  const auto labels = component_labels(Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(labels, (std::vector<std::uint32_t>{0, 0, 1, 1}));
}

TEST(Graph, RemovedEdgesSplitComponents) {
  const Graph g = path_graph(4);
  const std::vector<char> removed{0, 1, 0};
  const auto labels = component_labels(g, removed);
  EXPECT_EQ(labels[0], labels[1]);
  EXPECT_NE(labels[1], labels[2]);
}

TEST(Graph, CutsAndBoundaries) {
  const Graph g = cycle_graph(6);
  const std::vector<Vertex> a{0, 1, 2};
  const VertexSubset s(6, a);
  EXPECT_EQ(cut_size(g, s), 2u);
  EXPECT_EQ(outer_boundary(g, s), (std::vector<Vertex>{3, 5}));
  EXPECT_EQ(cut_edges(g, s), cut_edges(g, s.complement()));
  EXPECT_THROW(VertexSubset(3, std::vector<Vertex>{1, 1}), InvalidArgument);
}

TEST(Graph, BfsDistances) {
  const auto d = bfs_distances(cycle_graph(6), 0);
  EXPECT_EQ(d, (std::vector<int>{0, 1, 2, 3, 2, 1}));
  const auto e = bfs_distances(Graph(3, {{0, 1}}), 0);
  EXPECT_EQ(e[2], -1);
}

TEST(Graph, EdgeSubgraphKeepsOrder) {
  const Graph g = complete_graph(4);
  const std::vector<EdgeId> keep{5, 0};
  const Graph h = edge_subgraph(g, keep);
  EXPECT_EQ(h.num_vertices(), 4u);
  EXPECT_EQ(h.edge(0), g.edge(5));
  EXPECT_EQ(h.edge(1), g.edge(0));
}

TEST(DirectedGraph, OutLists) {
  const DirectedGraph d(3, {{0, 1, 0}, {1, 0, 0}, {0, 2, 1}});
  EXPECT_EQ(d.out_degree(0), 2u);
  EXPECT_EQ(d.out(0)[1].to, 2u);
  EXPECT_EQ(d.out_degree(2), 0u);
}
