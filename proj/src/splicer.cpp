#include "splicers/splicer.hpp"

#include <cmath>
#include <map>
#include <string>

#include "splicers/errors.hpp"

namespace splicers {

Splicer union_trees(std::vector<SpanningTree> trees) {
  if (trees.empty()) throw InvalidArgument("union_trees needs at least one tree");
  const std::size_t n = trees.front().n;
  for (const auto& t : trees) {
    if (t.n != n || t.parent.size() != n) throw InvalidArgument("trees span different vertex sets");
  }

  Splicer s;
  s.n = n;
  s.k = trees.size();
  std::map<std::pair<Vertex, Vertex>, std::size_t> index;
  std::vector<Edge> edges;
  for (const auto& t : trees) {
    // Each tree edge is the entry edge of exactly one (child) vertex.
    std::map<EdgeId, Vertex> child_of;
    for (Vertex v = 0; v < n; ++v) {
      if (v != t.root) child_of.emplace(t.parent_edge[v], v);
    }
    for (const EdgeId base : t.edges) {
      const Vertex child = child_of.at(base);
      const Vertex parent = t.parent[child];
      const std::pair<Vertex, Vertex> key{std::min(parent, child), std::max(parent, child)};
      const auto [it, inserted] = index.emplace(key, edges.size());
      if (inserted) {
        edges.push_back(Edge{key.first, key.second});
        s.multiplicity.push_back(1);
        s.base_edge.push_back(base);
      } else {
        ++s.multiplicity[it->second];
      }
    }
  }
  s.support = Graph(n, edges);
  s.source_trees = std::move(trees);
  return s;
}

Splicer splice(const Graph& g, std::size_t k, Seed seed) { return union_trees(sample_trees(g, k, seed)); }

WeightedGraph::WeightedGraph(Graph g, std::vector<double> w) : graph(std::move(g)), weight(std::move(w)) {
  if (weight.size() != graph.num_edges()) throw InvalidArgument("one weight per edge required");
  for (const double x : weight) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("edge weights must be positive and finite");
  }
}

double WeightedGraph::cut_weight(const VertexSubset& a) const {
  double total = 0.0;
  for (const EdgeId e : cut_edges(graph, a)) total += weight[e];
  return total;
}

double WeightedGraph::total_weight() const {
  double total = 0.0;
  for (const double x : weight) total += x;
  return total;
}

SparsifyResult sparsify_gnp(const Graph& h, double p, Seed seed, std::size_t max_retries) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("sparsify_gnp needs 0 < p <= 1");
  if (h.num_vertices() < 2 || !h.is_connected()) throw InvalidArgument("sparsify_gnp needs a connected graph");
  const double w = p * static_cast<double>(h.num_vertices());
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    auto run = sequential_two_trees_bp(h, p, seed.stream("splicer.sparsify_gnp.attempt", attempt));
    if (!run.trees) continue;
    auto splicer = union_trees({std::move(run.trees->first), std::move(run.trees->second)});
    WeightedGraph sparsifier(splicer.support, std::vector<double>(splicer.support.num_edges(), w));
    return SparsifyResult{std::move(sparsifier), std::move(splicer), attempt + 1};
  }
  throw SamplingFailure("sparsify_gnp: Process B_p failed " + std::to_string(max_retries + 1) + " times");
}

}  // namespace splicers
