#ifndef SPLICERS_STATS_HPP
#define SPLICERS_STATS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "splicers/generators.hpp"
#include "splicers/graph.hpp"
#include "splicers/rng.hpp"
#include "splicers/tree_sampler.hpp"

namespace splicers {

/// Statistical assertions compare against estimate ± this many standard errors.
inline constexpr double kStandardErrors = 4.0;

/// enumerate_trees is limited to graphs with at most this many edges.
inline constexpr std::size_t kEnumerationEdgeLimit = 20;

/// Every spanning tree as a bitmask over edge ids, ascending. Throws
/// InvalidArgument above kEnumerationEdgeLimit edges.
std::vector<std::uint32_t> enumerate_tree_masks(const Graph& g);

/// Every spanning tree, each rooted at vertex 0.
std::vector<SpanningTree> enumerate_trees(const Graph& g);

/// Exact Pr[e in T] per edge from enumeration.
std::vector<double> exact_edge_marginals(const Graph& g);

enum class CorrelationMode { kAuto, kExact, kMonteCarlo };

struct CorrelationSide {
  double joint = 0.0;    ///< Pr[all in T] (or Pr[none in T] for the complement side)
  double product = 0.0;  ///< product of the single-edge probabilities
  double standard_error = 0.0;  ///< of joint - product; 0 for exact
  bool holds = false;
};

struct CorrelationReport {
  std::vector<EdgeId> edges;
  bool exact = false;
  std::size_t trials = 0;  ///< 0 for exact reports
  Seed seed;
  CorrelationSide inclusion;
  CorrelationSide exclusion;
  /// Exact probabilities (present iff exact): numerators over `trees`.
  std::optional<std::uint64_t> trees;

  [[nodiscard]] bool holds() const { return inclusion.holds && exclusion.holds; }
};

/// Checks Pr[all e in T] <= Π Pr[e in T] and the same for "not in T".
/// kAuto is exact when g has at most kEnumerationEdgeLimit edges, otherwise
/// Monte Carlo with joint <= product + 4 SE (delta-method SE).
/// 1 <= |edges| <= 4.
CorrelationReport negative_correlation_check(const Graph& g, std::span<const EdgeId> edges, std::size_t trials,
                                             Seed seed, CorrelationMode mode = CorrelationMode::kAuto);

/// As above for several edge sets that share one batch of sampled trees.
std::vector<CorrelationReport> negative_correlation_checks(const Graph& g,
                                                           const std::vector<std::vector<EdgeId>>& edge_sets,
                                                           std::size_t trials, Seed seed,
                                                           CorrelationMode mode = CorrelationMode::kAuto);

struct TailPoint {
  double lambda = 0.0;
  double empirical = 0.0;  ///< Pr[sum X_e < p̄|δ| - λ]
  double bound = 0.0;      ///< exp(-λ² / (2 p̄|δ|))
  double standard_error = 0.0;
  bool holds = false;
};

struct TailCheckReport {
  std::vector<Vertex> cut;
  std::size_t cut_edges = 0;
  double mean_probability = 0.0;  ///< p̄ over δ(A)
  double mean_probability_se = 0.0;
  std::size_t trials = 0;
  Seed seed;
  std::vector<TailPoint> points;

  [[nodiscard]] bool holds() const;
};

/// λ multipliers of sqrt(p̄|δ|) used by default.
inline constexpr double kDefaultLambdaGrid[] = {0.25, 0.5, 1.0, 1.5};

/// Lower-tail check of |δ_T(A)| against the negatively-correlated Chernoff
/// bound. trials >= 10^4.
TailCheckReport chernoff_tail_check(const Graph& g, const VertexSubset& a, std::size_t trials, Seed seed,
                                    std::span<const double> lambda_grid = kDefaultLambdaGrid);

/// Several cuts evaluated on one shared batch of trees.
std::vector<TailCheckReport> chernoff_tail_checks(const Graph& g, const std::vector<VertexSubset>& cuts,
                                                  std::size_t trials, Seed seed,
                                                  std::span<const double> lambda_grid = kDefaultLambdaGrid);

struct MinEdgeReport {
  double probability = 0.0;
  EdgeId edge = kNoEdge;
  double standard_error = 0.0;
  std::size_t trials = 0;
};

/// min over e of the empirical Pr[e in T].
MinEdgeReport min_tree_edge_probability(const Graph& g, std::size_t trials, Seed seed);

/// Index of a labelled tree on n vertices via its Prüfer sequence, in
/// [0, n^(n-2)). Edges are vertex pairs.
std::uint64_t pruefer_index(std::size_t n, std::span<const Edge> edges);

struct CouplingReport {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trials = 0;
  Seed seed;
  double failure_rate = 0.0;  ///< upper bound on TV(T, T_p)
  double failure_se = 0.0;
  /// n <= 8 only: TV between the Process B_p tree distribution (failures
  /// count as their own outcome) and the exact uniform distribution on
  /// trees of K_n, and the same against an equal-size Aldous-Broder sample.
  std::optional<double> tv_to_uniform;
  std::optional<double> tv_to_aldous_broder;
};

/// Runs Process B_p on `trials` fresh G(n,p) graphs. n >= 8 for the
/// failure-rate bound is recommended; direct TV needs n <= 8.
CouplingReport coupling_distance_estimate(std::size_t n, double p, std::size_t trials, Seed seed,
                                          RevisitRule rule = RevisitRule::kPerArc);

/// True when the walk, on first reaching the gadget, goes around the outer
/// cycle without leaving it or repeating a vertex and then around the path
/// cycle the same way. Needs recorded visits; the walk must start outside
/// the gadget.
bool lower_bound_event(const WalkTrace& trace, const PathGadget& gadget);

/// Number of tree edges with exactly one endpoint in `side`.
std::size_t tree_cut_size(const SpanningTree& tree, std::span<const Vertex> side);

struct LowerBoundEventReport {
  std::size_t trees = 0;
  std::size_t observations = 0;  ///< trees * |I|
  std::size_t hits = 0;
  double frequency = 0.0;
  double standard_error = 0.0;
  double bound = 0.0;  ///< 1 / (d+2)^((d+1) ell - 1)
  std::size_t hits_with_single_edge_cut = 0;  ///< hits whose tree cuts V(P) once
  Vertex start = 0;
};

/// Samples `trees` Aldous-Broder trees of family.graph from a vertex
/// outside every gadget and counts the events over all gadgets.
LowerBoundEventReport measure_lower_bound_events(const LowerBoundFamily& family, std::size_t trees, Seed seed);

}  // namespace splicers

#endif  // SPLICERS_STATS_HPP
