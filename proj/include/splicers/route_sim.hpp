#ifndef SPLICERS_ROUTE_SIM_HPP
#define SPLICERS_ROUTE_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "splicers/graph.hpp"
#include "splicers/rng.hpp"
#include "splicers/splicer.hpp"
#include "splicers/tree_sampler.hpp"

namespace splicers {

/// Per-tree, per-destination next-hop tables over spanning trees of a base
/// graph, plus the set of failed base edges.
class RoutingState {
 public:
  /// Trees must span base's vertices and use base edge ids.
  RoutingState(const Graph& base, std::vector<SpanningTree> trees);

  [[nodiscard]] std::size_t num_vertices() const { return n_; }
  [[nodiscard]] std::size_t num_trees() const { return trees_.size(); }
  [[nodiscard]] const std::vector<SpanningTree>& trees() const { return trees_; }

  /// Tree neighbor of v toward dst in tree t; kNoVertex when v == dst.
  [[nodiscard]] Vertex next_hop(std::size_t t, Vertex dst, Vertex v) const { return hop_[t][index(dst, v)]; }
  /// The base edge used by that hop; kNoEdge when v == dst.
  [[nodiscard]] EdgeId next_edge(std::size_t t, Vertex dst, Vertex v) const { return edge_[t][index(dst, v)]; }
  /// Count of defined next_hop entries, k * n * (n-1) when complete.
  [[nodiscard]] std::size_t defined_entries() const;

  /// Flags per base edge id; an empty span clears all failures.
  void set_failures(std::span<const char> failed);
  [[nodiscard]] bool failed(EdgeId e) const { return !failed_.empty() && failed_[e] != 0; }

 private:
  [[nodiscard]] std::size_t index(Vertex dst, Vertex v) const { return static_cast<std::size_t>(dst) * n_ + v; }

  std::size_t n_ = 0;
  std::size_t base_edges_ = 0;
  std::vector<SpanningTree> trees_;
  std::vector<std::vector<Vertex>> hop_;
  std::vector<std::vector<EdgeId>> edge_;
  std::vector<char> failed_;
};

/// Builds the tables by one BFS per (tree, destination).
RoutingState build_routing(const Graph& base, std::vector<SpanningTree> trees);

enum class SwitchPolicy {
  kRandomOrder,  ///< blocked hop: try the other trees in a random order drawn per hop
  kRoundRobin,   ///< blocked hop: try trees t+1, t+2, ... cyclically
};

struct RouteResult {
  bool delivered = false;
  std::size_t hops = 0;
  std::size_t switches = 0;
  std::vector<Vertex> path;  ///< starts at src
};

/// Starts on tree 0 and follows the current tree while its next hop is
/// healthy. A tree is never reused at a vertex where it was already used
/// (loop guard), so a route fails when every usable tree is blocked or
/// exhausted, or at hop_cap (default 4n). Throws InvalidArgument if
/// src == dst or hop_cap < 1.
RouteResult route(const RoutingState& state, Vertex src, Vertex dst, SwitchPolicy policy, Seed seed,
                  std::optional<std::size_t> hop_cap = std::nullopt);

struct ReliabilityRow {
  std::uint64_t seed = 0;  ///< trial seed value
  double failure_prob = 0.0;
  double delivered_fraction = 0.0;
  double ceiling_fraction = 0.0;  ///< pairs still connected in g minus failures
  double mean_hops = 0.0;      ///< over delivered routes
  double mean_switches = 0.0;  ///< over delivered routes
};

struct ReliabilitySummary {
  std::size_t k = 0;
  std::size_t pairs = 0;
  std::vector<ReliabilityRow> rows;
  double delivered_fraction = 0.0;  ///< mean over trials
  double ceiling_fraction = 0.0;
  bool never_above_ceiling = true;
};

/// Per trial: k trees of g, independent edge failures, `pairs` random
/// ordered pairs. Failures and pairs come from streams that do not depend
/// on k, and tree i is the same for every k, so runs with different k on
/// one seed are coupled.
ReliabilitySummary reliability_experiment(const Graph& g, std::size_t k, double failure_prob, std::size_t pairs,
                                          std::size_t trials, Seed seed,
                                          SwitchPolicy policy = SwitchPolicy::kRandomOrder);

std::string reliability_csv(const ReliabilitySummary& summary);

/// Diameters are computed up to this many vertices.
inline constexpr std::size_t kExactDiameterLimit = 4096;

struct StretchReport {
  double mean_stretch = 0.0;
  std::size_t pairs = 0;
  std::optional<std::size_t> diameter;  ///< of the splicer support
};

/// Mean of dist_support(u,v) / dist_g(u,v) over random pairs u != v.
StretchReport stretch_stats(const Graph& g, const Splicer& splicer, std::size_t pairs, Seed seed);

/// Exact diameter by BFS from every vertex. Throws InvalidArgument if g is
/// disconnected.
std::size_t diameter(const Graph& g);

}  // namespace splicers

#endif  // SPLICERS_ROUTE_SIM_HPP
