#ifndef SPLICERS_TREE_SAMPLER_HPP
#define SPLICERS_TREE_SAMPLER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splicers/graph.hpp"
#include "splicers/rng.hpp"

namespace splicers {

/// A spanning tree of some base graph, rooted where its walk started.
/// parent_edge[v] is the base-graph edge used on v's first visit.
struct SpanningTree {
  std::size_t n = 0;
  Vertex root = 0;
  std::vector<EdgeId> edges;  ///< first-visit order, n-1 entries
  std::vector<Vertex> parent;  ///< kNoVertex at the root
  std::vector<EdgeId> parent_edge;  ///< kNoEdge at the root

  /// Edge ids in ascending order; a canonical key for the tree.
  [[nodiscard]] std::vector<EdgeId> sorted_edges() const;
  [[nodiscard]] bool contains(EdgeId e) const;
};

struct WalkTrace {
  std::vector<Vertex> visits;  ///< X_0, X_1, ...; empty unless recording was requested
  std::vector<std::uint64_t> first_visit;  ///< step at which each vertex was first reached
  std::uint64_t steps = 0;  ///< number of moves made
};

struct TreeSample {
  SpanningTree tree;
  WalkTrace trace;
};

/// Returns one message per violated SpanningTree invariant against `g`
/// (and against `trace` when it carries recorded visits).
std::vector<std::string> validate_tree(const Graph& g, const SpanningTree& tree,
                                       const WalkTrace* trace = nullptr);

struct WalkOptions {
  Vertex start = 0;
  bool record_visits = true;
  /// 0 selects the default cap (see aldous_broder_step_cap).
  std::uint64_t step_cap = 0;
};

/// max(64 n ln(n) Δ/δ, 64 m n); the second term dominates the worst-case
/// cover time 2m(n-1) of any connected graph.
std::uint64_t aldous_broder_step_cap(const Graph& g);

/// Uniform spanning tree by the Aldous-Broder walk: walk uniformly from
/// `start` until every vertex is seen; keep each vertex's entry edge.
/// Throws SamplingFailure if g is disconnected or the step cap trips, and
/// InvalidArgument for a bad start vertex.
TreeSample aldous_broder(const Graph& g, Seed seed, const WalkOptions& options = {});

/// Empirical Pr[e in T] over `trials` independent Aldous-Broder trees.
double edge_inclusion_probability(const Graph& g, EdgeId e, std::size_t trials, Seed seed);

/// Same draws as edge_inclusion_probability, for every edge at once.
std::vector<double> edge_inclusion_frequencies(const Graph& g, std::size_t trials, Seed seed);

/// Seed for trial i of the inclusion-frequency experiments.
Seed inclusion_trial_seed(Seed seed, std::size_t trial);

/// k independent trees, tree i from seed.stream("tree_sampler.sample_trees", i).
std::vector<SpanningTree> sample_trees(const Graph& g, std::size_t k, Seed seed);

/// How a previously traversed out-arc is weighted in Process B_p.
enum class RevisitRule {
  kPerArc,  ///< each traversed arc gets 1/(n-1); new arcs share the rest
  kTotal,   ///< all traversed arcs together get 1/(n-1)
};

/// Integer step weights at a vertex with d out-arcs, d1 of them traversed:
/// each traversed arc has probability old_units/total and each new arc
/// new_units/total. d1 < d <= n-1 required.
struct StepWeights {
  std::uint64_t old_units;
  std::uint64_t new_units;
  std::uint64_t total;
};
StepWeights process_b_step_weights(std::size_t n, std::size_t d, std::size_t d1,
                                   RevisitRule rule = RevisitRule::kPerArc);

struct ProcessBFailure {
  Vertex stuck;
  std::uint64_t steps;
};

struct ProcessBResult {
  std::variant<TreeSample, ProcessBFailure> outcome;
  DirectedGraph oriented;

  [[nodiscard]] bool succeeded() const { return std::holds_alternative<TreeSample>(outcome); }
  [[nodiscard]] const TreeSample& sample() const { return std::get<TreeSample>(outcome); }
  [[nodiscard]] const ProcessBFailure& failure() const { return std::get<ProcessBFailure>(outcome); }
};

struct ProcessBOptions {
  Vertex start = 0;
  RevisitRule rule = RevisitRule::kPerArc;
  bool record_visits = false;
};

/// Process B_p: orient h as D_p(h) from seed.stream("...orient"), then walk
/// it from seed.stream("...walk"). Tree edges are ids of h.
ProcessBResult process_bp(const Graph& h, double p, Seed seed, const ProcessBOptions& options = {});

/// The walk half of Process B_p on a fixed orientation of `h`.
std::variant<TreeSample, ProcessBFailure> walk_process_b(const Graph& h, const DirectedGraph& oriented,
                                                         Seed walk_seed, const ProcessBOptions& options = {});

struct TwoTreeResult {
  std::optional<std::pair<SpanningTree, SpanningTree>> trees;
  int failed_phase = 0;  ///< 1 or 2 when trees is empty
  ProcessBFailure failure{};
  DirectedGraph oriented;
};

/// Two trees cut from one continuous Process B_p walk. At the first cover
/// the visited set resets (the walk stays where it is and that vertex roots
/// the second tree); traversed-arc bookkeeping carries over.
TwoTreeResult sequential_two_trees_bp(const Graph& h, double p, Seed seed, const ProcessBOptions& options = {});

}  // namespace splicers

#endif  // SPLICERS_TREE_SAMPLER_HPP
