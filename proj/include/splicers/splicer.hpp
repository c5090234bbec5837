#ifndef SPLICERS_SPLICER_HPP
#define SPLICERS_SPLICER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "splicers/graph.hpp"
#include "splicers/rng.hpp"
#include "splicers/tree_sampler.hpp"

namespace splicers {

/// Union of k spanning trees. Support edges appear in first-seen order
/// (tree 0's edges in walk order, then new edges of tree 1, ...).
struct Splicer {
  std::size_t n = 0;
  std::size_t k = 0;
  Graph support;
  std::vector<std::uint32_t> multiplicity;  ///< per support edge, trees containing it
  std::vector<EdgeId> base_edge;  ///< per support edge, id in the trees' base graph
  std::vector<SpanningTree> source_trees;
};

/// Throws InvalidArgument on an empty list or mismatched vertex counts.
Splicer union_trees(std::vector<SpanningTree> trees);

/// union_trees(sample_trees(g, k, seed)).
Splicer splice(const Graph& g, std::size_t k, Seed seed);

struct WeightedGraph {
  Graph graph;
  std::vector<double> weight;  ///< per edge id, strictly positive

  /// Throws InvalidArgument on a weight count mismatch or non-positive weight.
  WeightedGraph(Graph g, std::vector<double> w);

  [[nodiscard]] double cut_weight(const VertexSubset& a) const;
  [[nodiscard]] double total_weight() const;
};

struct SparsifyResult {
  WeightedGraph sparsifier;
  Splicer splicer;
  std::size_t attempts = 0;  ///< Process B_p runs used, including the successful one
};

inline constexpr std::size_t kSparsifyRetries = 16;

/// Two-tree Process B_p splicer of h with weight p*n on every support edge.
/// A failed Process B_p run is retried on a fresh substream up to
/// `max_retries` times before SamplingFailure. Disconnected h is an
/// InvalidArgument.
SparsifyResult sparsify_gnp(const Graph& h, double p, Seed seed, std::size_t max_retries = kSparsifyRetries);

}  // namespace splicers

#endif  // SPLICERS_SPLICER_HPP
