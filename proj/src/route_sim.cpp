#include "splicers/route_sim.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "splicers/errors.hpp"
#include "splicers/io.hpp"

namespace splicers {

RoutingState::RoutingState(const Graph& base, std::vector<SpanningTree> trees)
    : n_(base.num_vertices()), base_edges_(base.num_edges()), trees_(std::move(trees)) {
  if (trees_.empty()) throw InvalidArgument("routing needs at least one tree");
  for (const auto& tree : trees_) {
    if (tree.n != n_ || tree.parent.size() != n_) throw InvalidArgument("trees must span the base graph");
  }
  hop_.assign(trees_.size(), std::vector<Vertex>(n_ * n_, kNoVertex));
  edge_.assign(trees_.size(), std::vector<EdgeId>(n_ * n_, kNoEdge));

  std::vector<Vertex> order;
  std::vector<char> seen(n_);
  for (std::size_t t = 0; t < trees_.size(); ++t) {
    const auto& tree = trees_[t];
    std::vector<std::vector<Incidence>> adj(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (v == tree.root) continue;
      if (tree.parent_edge[v] >= base_edges_) throw InvalidArgument("tree edge is not a base edge");
      adj[v].push_back({tree.parent[v], tree.parent_edge[v]});
      adj[tree.parent[v]].push_back({v, tree.parent_edge[v]});
    }
    for (Vertex dst = 0; dst < n_; ++dst) {
      std::fill(seen.begin(), seen.end(), 0);
      order.assign(1, dst);
      seen[dst] = 1;
      for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex v = order[head];
        for (const auto& inc : adj[v]) {
          if (seen[inc.neighbor]) continue;
          seen[inc.neighbor] = 1;
          hop_[t][index(dst, inc.neighbor)] = v;
          edge_[t][index(dst, inc.neighbor)] = inc.edge;
          order.push_back(inc.neighbor);
        }
      }
      if (order.size() != n_) throw InvalidArgument("tree does not span the base graph");
    }
  }
}

std::size_t RoutingState::defined_entries() const {
  std::size_t count = 0;
  for (const auto& table : hop_) count += static_cast<std::size_t>(std::count_if(
      table.begin(), table.end(), [](Vertex v) { return v != kNoVertex; }));
  return count;
}

void RoutingState::set_failures(std::span<const char> failed) {
  if (!failed.empty() && failed.size() != base_edges_) throw InvalidArgument("one failure flag per base edge");
  failed_.assign(failed.begin(), failed.end());
}

RoutingState build_routing(const Graph& base, std::vector<SpanningTree> trees) {
  return RoutingState(base, std::move(trees));
}

RouteResult route(const RoutingState& state, Vertex src, Vertex dst, SwitchPolicy policy, Seed seed,
                  std::optional<std::size_t> hop_cap) {
  const std::size_t n = state.num_vertices();
  const std::size_t k = state.num_trees();
  if (src >= n || dst >= n) throw InvalidArgument("route endpoint out of range");
  if (src == dst) throw InvalidArgument("route needs src != dst");
  if (hop_cap && *hop_cap < 1) throw InvalidArgument("hop_cap must be at least 1");
  const std::size_t cap = hop_cap.value_or(4 * n);

  RouteResult result;
  result.path.push_back(src);
  std::vector<char> used(n * k, 0);  // (vertex, tree) pairs already left through
  std::vector<std::size_t> candidates;
  Vertex v = src;
  std::size_t t = 0;
  while (result.hops < cap) {
    auto usable = [&](std::size_t tree) {
      return !used[v * k + tree] && !state.failed(state.next_edge(tree, dst, v));
    };
    if (!usable(t)) {
      candidates.clear();
      for (std::size_t step = 1; step < k; ++step) candidates.push_back((t + step) % k);
      if (policy == SwitchPolicy::kRandomOrder) {
        Rng rng(seed.stream("route_sim.route.hop", result.hops));
        shuffle(candidates.begin(), candidates.end(), rng);
      }
      const auto it = std::find_if(candidates.begin(), candidates.end(), usable);
      if (it == candidates.end()) return result;
      t = *it;
      ++result.switches;
    }
    used[v * k + t] = 1;
    v = state.next_hop(t, dst, v);
    ++result.hops;
    result.path.push_back(v);
    if (v == dst) {
      result.delivered = true;
      return result;
    }
  }
  return result;
}

ReliabilitySummary reliability_experiment(const Graph& g, std::size_t k, double failure_prob, std::size_t pairs,
                                          std::size_t trials, Seed seed, SwitchPolicy policy) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (!(failure_prob >= 0.0 && failure_prob <= 1.0)) throw InvalidArgument("failure_prob must lie in [0, 1]");
  if (g.num_vertices() < 2) throw InvalidArgument("reliability needs at least two vertices");
  if (!g.is_connected()) throw InvalidArgument("reliability needs a connected graph");
  const std::size_t n = g.num_vertices();

  ReliabilitySummary summary;
  summary.k = k;
  summary.pairs = pairs;
  std::vector<char> failed(g.num_edges());
  for (std::size_t i = 0; i < trials; ++i) {
    const Seed trial = seed.stream("route_sim.reliability.trial", i);
    auto state = build_routing(g, sample_trees(g, k, trial.stream("route_sim.reliability.trees")));
    Rng fail_rng(trial.stream("route_sim.reliability.failures"));
    for (auto& f : failed) f = fail_rng.bernoulli(failure_prob) ? 1 : 0;
    state.set_failures(failed);
    const auto labels = component_labels(g, failed);

    Rng pair_rng(trial.stream("route_sim.reliability.pairs"));
    std::size_t delivered = 0;
    std::size_t connected = 0;
    std::size_t hops = 0;
    std::size_t switches = 0;
    for (std::size_t j = 0; j < pairs; ++j) {
      const auto src = static_cast<Vertex>(pair_rng.uniform_below(n));
      auto dst = static_cast<Vertex>(pair_rng.uniform_below(n - 1));
      if (dst >= src) ++dst;
      if (labels[src] == labels[dst]) ++connected;
      const auto r = route(state, src, dst, policy, trial.stream("route_sim.reliability.route", j));
      if (!r.delivered) continue;
      ++delivered;
      hops += r.hops;
      switches += r.switches;
    }
    ReliabilityRow row;
    row.seed = trial.value();
    row.failure_prob = failure_prob;
    if (pairs > 0) {
      row.delivered_fraction = static_cast<double>(delivered) / static_cast<double>(pairs);
      row.ceiling_fraction = static_cast<double>(connected) / static_cast<double>(pairs);
    }
    if (delivered > 0) {
      row.mean_hops = static_cast<double>(hops) / static_cast<double>(delivered);
      row.mean_switches = static_cast<double>(switches) / static_cast<double>(delivered);
    }
    if (delivered > connected) summary.never_above_ceiling = false;
    summary.rows.push_back(row);
  }
  if (!summary.rows.empty()) {
    const auto count = static_cast<double>(summary.rows.size());
    for (const auto& row : summary.rows) {
      summary.delivered_fraction += row.delivered_fraction / count;
      summary.ceiling_fraction += row.ceiling_fraction / count;
    }
  }
  return summary;
}

std::string reliability_csv(const ReliabilitySummary& summary) {
  std::ostringstream out;
  out << "seed,failure_prob,delivered_fraction,ceiling_fraction,mean_hops,mean_switches\n";
  for (const auto& row : summary.rows) {
    out << row.seed << ',' << format_double(row.failure_prob) << ',' << format_double(row.delivered_fraction) << ','
        << format_double(row.ceiling_fraction) << ',' << format_double(row.mean_hops) << ','
        << format_double(row.mean_switches) << '\n';
  }
  return out.str();
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    for (const int d : bfs_distances(g, s)) {
      if (d < 0) throw InvalidArgument("diameter of a disconnected graph");
      best = std::max(best, static_cast<std::size_t>(d));
    }
  }
  return best;
}

StretchReport stretch_stats(const Graph& g, const Splicer& splicer, std::size_t pairs, Seed seed) {
  const std::size_t n = g.num_vertices();
  if (splicer.n != n) throw InvalidArgument("splicer and graph disagree on the vertex count");
  if (n < 2) throw InvalidArgument("stretch needs at least two vertices");
  if (!g.is_connected() || !splicer.support.is_connected()) throw InvalidArgument("stretch needs connected inputs");

  // Pairs grouped by source so each source costs one BFS per graph.
  Rng rng(seed.stream("route_sim.stretch.pairs"));
  std::vector<std::pair<Vertex, Vertex>> sampled(pairs);
  for (auto& [u, v] : sampled) {
    u = static_cast<Vertex>(rng.uniform_below(n));
    v = static_cast<Vertex>(rng.uniform_below(n - 1));
    if (v >= u) ++v;
  }
  std::sort(sampled.begin(), sampled.end());

  StretchReport report;
  report.pairs = pairs;
  double total = 0.0;
  std::vector<int> in_support;
  std::vector<int> in_g;
  Vertex current = kNoVertex;
  for (const auto& [u, v] : sampled) {
    if (u != current) {
      current = u;
      in_support = bfs_distances(splicer.support, u);
      in_g.clear();
    }
    int base = 1;
    if (!g.has_edge(u, v)) {
      if (in_g.empty()) in_g = bfs_distances(g, u);
      base = in_g[v];
    }
    total += static_cast<double>(in_support[v]) / base;
  }
  if (pairs > 0) report.mean_stretch = total / static_cast<double>(pairs);
  if (n <= kExactDiameterLimit) report.diameter = diameter(splicer.support);
  return report;
}

}  // namespace splicers
