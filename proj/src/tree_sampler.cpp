#include "splicers/tree_sampler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "splicers/errors.hpp"
#include "splicers/generators.hpp"

namespace splicers {

std::vector<EdgeId> SpanningTree::sorted_edges() const {
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool SpanningTree::contains(EdgeId e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

std::vector<std::string> validate_tree(const Graph& g, const SpanningTree& tree, const WalkTrace* trace) {
  std::vector<std::string> problems;
  const std::size_t n = g.num_vertices();
  if (tree.n != n || tree.parent.size() != n || tree.parent_edge.size() != n) {
    problems.push_back("tree size does not match graph");
    return problems;
  }
  if (tree.edges.size() + 1 != n) problems.push_back("tree does not have n-1 edges");
  if (tree.root >= n || tree.parent[tree.root] != kNoVertex) problems.push_back("root has a parent");

  for (Vertex v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    const EdgeId e = tree.parent_edge[v];
    if (e >= g.num_edges()) {
      problems.push_back("vertex " + std::to_string(v) + " has no entry edge");
      continue;
    }
    const Edge& edge = g.edge(e);
    if (!(edge.u == v || edge.v == v) || edge.other(v) != tree.parent[v]) {
      problems.push_back("entry edge of vertex " + std::to_string(v) + " does not join it to its parent");
    }
    if (!tree.contains(e)) problems.push_back("entry edge of " + std::to_string(v) + " missing from edge list");
  }

  // Acyclic and spanning: every vertex must reach the root by parent links.
  for (Vertex v = 0; v < n && problems.empty(); ++v) {
    Vertex w = v;
    std::size_t hops = 0;
    while (w != tree.root && w != kNoVertex && hops <= n) {
      w = tree.parent[w];
      ++hops;
    }
    if (w != tree.root) problems.push_back("vertex " + std::to_string(v) + " does not reach the root");
  }

  if (trace != nullptr && !trace->visits.empty()) {
    const auto& x = trace->visits;
    if (x.front() != tree.root) problems.push_back("trace does not start at the root");
    for (std::size_t t = 0; t + 1 < x.size(); ++t) {
      if (!g.has_edge(x[t], x[t + 1])) {
        problems.push_back("trace step " + std::to_string(t) + " is not an edge");
        break;
      }
    }
    std::vector<char> seen(n, 0);
    std::size_t distinct = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (seen[x[t]]) continue;
      seen[x[t]] = 1;
      ++distinct;
      if (trace->first_visit[x[t]] != t) problems.push_back("first-visit time mismatch");
      if (t > 0 && tree.parent[x[t]] != x[t - 1]) {
        problems.push_back("parent of " + std::to_string(x[t]) + " is not its predecessor in the walk");
      }
    }
    if (distinct != n) problems.push_back("trace does not cover all vertices");
  }
  return problems;
}

std::uint64_t aldous_broder_step_cap(const Graph& g) {
  const double n = static_cast<double>(g.num_vertices());
  const double m = static_cast<double>(g.num_edges());
  const double min_deg = std::max<double>(1.0, static_cast<double>(g.min_degree()));
  const double ratio = static_cast<double>(g.max_degree()) / min_deg;
  const double by_degrees = 64.0 * n * std::log(std::max(n, 2.0)) * ratio;
  const double by_edges = 64.0 * m * n;
  return static_cast<std::uint64_t>(std::ceil(std::max(by_degrees, by_edges))) + 64;
}

namespace {

SpanningTree empty_tree(std::size_t n, Vertex root) {
  SpanningTree tree;
  tree.n = n;
  tree.root = root;
  tree.parent.assign(n, kNoVertex);
  tree.parent_edge.assign(n, kNoEdge);
  tree.edges.reserve(n > 0 ? n - 1 : 0);
  return tree;
}

}  // namespace

TreeSample aldous_broder(const Graph& g, Seed seed, const WalkOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InvalidArgument("aldous_broder on an empty graph");
  if (options.start >= n) throw InvalidArgument("start vertex out of range");
  if (!g.is_connected()) throw SamplingFailure("aldous_broder: graph is disconnected, walk cannot cover");

  TreeSample out;
  out.tree = empty_tree(n, options.start);
  WalkTrace& trace = out.trace;
  trace.first_visit.assign(n, 0);
  if (options.record_visits) trace.visits.push_back(options.start);

  const std::uint64_t cap = options.step_cap == 0 ? aldous_broder_step_cap(g) : options.step_cap;
  std::vector<char> visited(n, 0);
  visited[options.start] = 1;
  std::size_t remaining = n - 1;
  Vertex current = options.start;
  Rng rng(seed);
  while (remaining > 0) {
    if (trace.steps == cap) {
      throw SamplingFailure("aldous_broder: walk did not cover the graph within " + std::to_string(cap) +
                            " steps");
    }
    const auto adj = g.neighbors(current);
    const Incidence& step = adj[rng.uniform_below(adj.size())];
    ++trace.steps;
    if (!visited[step.neighbor]) {
      visited[step.neighbor] = 1;
      --remaining;
      out.tree.parent[step.neighbor] = current;
      out.tree.parent_edge[step.neighbor] = step.edge;
      out.tree.edges.push_back(step.edge);
      trace.first_visit[step.neighbor] = trace.steps;
    }
    current = step.neighbor;
    if (options.record_visits) trace.visits.push_back(current);
  }
  return out;
}

Seed inclusion_trial_seed(Seed seed, std::size_t trial) {
  return seed.stream("tree_sampler.edge_inclusion", trial);
}

std::vector<double> edge_inclusion_frequencies(const Graph& g, std::size_t trials, Seed seed) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  std::vector<std::uint64_t> hits(g.num_edges(), 0);
  WalkOptions options;
  options.record_visits = false;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto sample = aldous_broder(g, inclusion_trial_seed(seed, i), options);
    for (const EdgeId e : sample.tree.edges) ++hits[e];
  }
  std::vector<double> freq(g.num_edges());
  for (std::size_t e = 0; e < freq.size(); ++e) {
    freq[e] = static_cast<double>(hits[e]) / static_cast<double>(trials);
  }
  return freq;
}

double edge_inclusion_probability(const Graph& g, EdgeId e, std::size_t trials, Seed seed) {
  if (e >= g.num_edges()) throw InvalidArgument("edge id out of range");
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  std::uint64_t hits = 0;
  WalkOptions options;
  options.record_visits = false;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto sample = aldous_broder(g, inclusion_trial_seed(seed, i), options);
    // The entry edge of either endpoint is the only way e can be in the tree.
    const auto [u, v] = g.edge(e);
    hits += (sample.tree.parent_edge[u] == e || sample.tree.parent_edge[v] == e) ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

std::vector<SpanningTree> sample_trees(const Graph& g, std::size_t k, Seed seed) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  std::vector<SpanningTree> trees;
  trees.reserve(k);
  WalkOptions options;
  options.record_visits = false;
  for (std::size_t i = 0; i < k; ++i) {
    trees.push_back(aldous_broder(g, seed.stream("tree_sampler.sample_trees", i), options).tree);
  }
  return trees;
}

StepWeights process_b_step_weights(std::size_t n, std::size_t d, std::size_t d1, RevisitRule rule) {
  if (n < 2 || d > n - 1 || d1 >= d) throw InvalidArgument("step weights need d1 < d <= n-1");
  const std::uint64_t fresh = d - d1;
  if (rule == RevisitRule::kPerArc) {
    // old arc: 1/(n-1); new arc: (1 - d1/(n-1)) / (d - d1)
    return StepWeights{fresh, n - 1 - d1, (n - 1) * fresh};
  }
  if (d1 == 0) return StepWeights{0, 1, fresh};
  // old arcs share 1/(n-1); new arcs share (n-2)/(n-1)
  return StepWeights{fresh, (n - 2) * d1, (n - 1) * d1 * fresh};
}

namespace {

// Process B_p walk state over a fixed orientation. Traversed-arc flags live
// for the walker's lifetime; the visited set is per phase.
class ProcessBWalker {
 public:
  ProcessBWalker(const DirectedGraph& oriented, Seed walk_seed, const ProcessBOptions& options)
      : d_(oriented),
        options_(options),
        rng_(walk_seed),
        traversed_(oriented.num_arcs(), 0),
        used_(oriented.num_vertices(), 0),
        current_(options.start) {}

  // Walks from the current position until all vertices are visited (counting
  // the current vertex as the first visit) or the walk gets stuck.
  std::variant<TreeSample, ProcessBFailure> next_tree() {
    const std::size_t n = d_.num_vertices();
    TreeSample out;
    out.tree = empty_tree(n, current_);
    out.trace.first_visit.assign(n, 0);
    if (options_.record_visits) out.trace.visits.push_back(current_);
    std::vector<char> visited(n, 0);
    visited[current_] = 1;
    std::size_t remaining = n - 1;
    while (remaining > 0) {
      const auto arcs = d_.out(current_);
      const std::size_t d = arcs.size();
      const std::size_t d1 = used_[current_];
      if (d1 == d) return ProcessBFailure{current_, total_steps_};
      const auto w = process_b_step_weights(n, d, d1, options_.rule);
      assert(w.old_units * d1 + w.new_units * (d - d1) == w.total);
      std::uint64_t r = rng_.uniform_below(w.total);
      const bool pick_old = r < w.old_units * d1;
      std::uint64_t rank = pick_old ? r / w.old_units : (r - w.old_units * d1) / w.new_units;
      const OutArc* chosen = nullptr;
      for (const auto& oa : arcs) {
        if ((traversed_[oa.arc] != 0) == pick_old) {
          if (rank == 0) {
            chosen = &oa;
            break;
          }
          --rank;
        }
      }
      assert(chosen != nullptr);
      if (!traversed_[chosen->arc]) {
        traversed_[chosen->arc] = 1;
        ++used_[current_];
      }
      ++total_steps_;
      ++out.trace.steps;
      const Vertex next = chosen->to;
      if (!visited[next]) {
        visited[next] = 1;
        --remaining;
        const EdgeId e = d_.arc(chosen->arc).source_edge;
        out.tree.parent[next] = current_;
        out.tree.parent_edge[next] = e;
        out.tree.edges.push_back(e);
        out.trace.first_visit[next] = out.trace.steps;
      }
      current_ = next;
      if (options_.record_visits) out.trace.visits.push_back(current_);
    }
    return out;
  }

 private:
  const DirectedGraph& d_;
  ProcessBOptions options_;
  Rng rng_;
  std::vector<char> traversed_;
  std::vector<std::uint32_t> used_;  // d_1(v)
  Vertex current_;
  std::uint64_t total_steps_ = 0;
};

void check_process_b_inputs(const Graph& h, double p, Vertex start) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("Process B_p needs 0 < p <= 1");
  if (h.num_vertices() < 2) throw InvalidArgument("Process B_p needs at least 2 vertices");
  if (start >= h.num_vertices()) throw InvalidArgument("start vertex out of range");
}

}  // namespace

std::variant<TreeSample, ProcessBFailure> walk_process_b(const Graph& h, const DirectedGraph& oriented,
                                                         Seed walk_seed, const ProcessBOptions& options) {
  if (oriented.num_vertices() != h.num_vertices()) throw InvalidArgument("orientation does not match graph");
  if (options.start >= h.num_vertices()) throw InvalidArgument("start vertex out of range");
  ProcessBWalker walker(oriented, walk_seed, options);
  return walker.next_tree();
}

ProcessBResult process_bp(const Graph& h, double p, Seed seed, const ProcessBOptions& options) {
  check_process_b_inputs(h, p, options.start);
  ProcessBResult result{ProcessBFailure{options.start, 0},
                        direct_edges_dp(h, p, seed.stream("tree_sampler.process_bp.orient"))};
  result.outcome = walk_process_b(h, result.oriented, seed.stream("tree_sampler.process_bp.walk"), options);
  return result;
}

TwoTreeResult sequential_two_trees_bp(const Graph& h, double p, Seed seed, const ProcessBOptions& options) {
  check_process_b_inputs(h, p, options.start);
  TwoTreeResult result;
  result.oriented = direct_edges_dp(h, p, seed.stream("tree_sampler.process_bp.orient"));
  ProcessBWalker walker(result.oriented, seed.stream("tree_sampler.process_bp.walk"), options);
  auto first = walker.next_tree();
  if (auto* failure = std::get_if<ProcessBFailure>(&first)) {
    result.failed_phase = 1;
    result.failure = *failure;
    return result;
  }
  auto second = walker.next_tree();
  if (auto* failure = std::get_if<ProcessBFailure>(&second)) {
    result.failed_phase = 2;
    result.failure = *failure;
    return result;
  }
  result.trees.emplace(std::move(std::get<TreeSample>(first).tree), std::move(std::get<TreeSample>(second).tree));
  return result;
}

}  // namespace splicers
