#include "splicers/stats.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "splicers/errors.hpp"

namespace splicers {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

SpanningTree rooted_tree(const Graph& g, std::span<const EdgeId> edges, Vertex root) {
  const std::size_t n = g.num_vertices();
  SpanningTree tree;
  tree.n = n;
  tree.root = root;
  tree.parent.assign(n, kNoVertex);
  tree.parent_edge.assign(n, kNoEdge);
  std::vector<std::vector<Incidence>> adj(n);
  for (const EdgeId e : edges) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  std::vector<Vertex> order{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& inc : adj[order[head]]) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      tree.parent[inc.neighbor] = order[head];
      tree.parent_edge[inc.neighbor] = inc.edge;
      tree.edges.push_back(inc.edge);
      order.push_back(inc.neighbor);
    }
  }
  return tree;
}

double ratio(std::uint64_t count, std::uint64_t total) {
  return static_cast<double>(count) / static_cast<double>(total);
}

// Per-edge-set tallies over sampled trees.
struct Tally {
  std::vector<std::uint64_t> single;  // X_i = 1
  std::vector<std::vector<std::uint64_t>> pair;  // X_i = X_j = 1
  std::uint64_t all_in = 0;
  std::uint64_t none_in = 0;
};

// Delta-method standard error of mean(prod Z_i) - prod mean(Z_i) for 0-1
// variables with marginals m, pairwise joints pj and full joint j.
double difference_se(const std::vector<double>& m, const std::vector<std::vector<double>>& pj, double j,
                     std::size_t trials) {
  const std::size_t k = m.size();
  std::vector<double> c(k, 1.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (l != i) c[i] *= m[l];
    }
  }
  double var = j * (1.0 - j);
  for (std::size_t i = 0; i < k; ++i) {
    var -= 2.0 * c[i] * j * (1.0 - m[i]);
    for (std::size_t l = 0; l < k; ++l) var += c[i] * c[l] * (pj[i][l] - m[i] * m[l]);
  }
  return std::sqrt(std::max(var, 0.0) / static_cast<double>(trials));
}

void validate_edge_set(const Graph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) throw InvalidArgument("negative correlation check needs at least one edge");
  if (edges.size() > 4) throw InvalidArgument("negative correlation check supports at most 4 edges");
  for (const EdgeId e : edges) {
    if (e >= g.num_edges()) throw InvalidArgument("edge id out of range");
  }
}

}  // namespace

std::vector<std::uint32_t> enumerate_tree_masks(const Graph& g) {
  const std::size_t m = g.num_edges();
  const std::size_t n = g.num_vertices();
  if (m > kEnumerationEdgeLimit) {
    throw InvalidArgument("tree enumeration is limited to " + std::to_string(kEnumerationEdgeLimit) + " edges");
  }
  std::vector<std::uint32_t> trees;
  if (n == 0) return trees;
  const std::size_t k = n - 1;
  if (k > m) return trees;
  if (k == 0) return {0};
  // Gosper's hack over all k-subsets of m bits.
  std::uint32_t subset = (std::uint32_t{1} << k) - 1;
  const std::uint32_t end = std::uint32_t{1} << m;
  while (subset < end) {
    DisjointSets sets(n);
    bool acyclic = true;
    for (std::uint32_t rest = subset; rest != 0 && acyclic; rest &= rest - 1) {
      const auto& e = g.edge(static_cast<EdgeId>(std::countr_zero(rest)));
      acyclic = sets.unite(e.u, e.v);
    }
    if (acyclic) trees.push_back(subset);
    const std::uint32_t low = subset & (0 - subset);
    const std::uint32_t ripple = subset + low;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
  }
  return trees;
}

std::vector<SpanningTree> enumerate_trees(const Graph& g) {
  std::vector<SpanningTree> trees;
  for (const std::uint32_t mask : enumerate_tree_masks(g)) {
    std::vector<EdgeId> edges;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      edges.push_back(static_cast<EdgeId>(std::countr_zero(rest)));
    }
    trees.push_back(rooted_tree(g, edges, 0));
  }
  return trees;
}

std::vector<double> exact_edge_marginals(const Graph& g) {
  const auto trees = enumerate_tree_masks(g);
  std::vector<double> marginals(g.num_edges(), 0.0);
  if (trees.empty()) return marginals;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto count = std::count_if(trees.begin(), trees.end(), [e](std::uint32_t t) { return (t >> e) & 1U; });
    marginals[e] = ratio(static_cast<std::uint64_t>(count), trees.size());
  }
  return marginals;
}

std::vector<CorrelationReport> negative_correlation_checks(const Graph& g,
                                                           const std::vector<std::vector<EdgeId>>& edge_sets,
                                                           std::size_t trials, Seed seed, CorrelationMode mode) {
  for (const auto& set : edge_sets) validate_edge_set(g, set);
  const bool exact = mode == CorrelationMode::kExact ||
                     (mode == CorrelationMode::kAuto && g.num_edges() <= kEnumerationEdgeLimit);
  std::vector<CorrelationReport> reports(edge_sets.size());

  if (exact) {
    const auto trees = enumerate_tree_masks(g);
    if (trees.empty()) throw InvalidArgument("graph has no spanning tree");
    const mpz_class total = static_cast<unsigned long>(trees.size());
    for (std::size_t s = 0; s < edge_sets.size(); ++s) {
      const auto& set = edge_sets[s];
      std::uint32_t set_mask = 0;
      for (const EdgeId e : set) set_mask |= std::uint32_t{1} << e;
      std::uint64_t all_in = 0;
      std::uint64_t none_in = 0;
      for (const std::uint32_t t : trees) {
        all_in += (t & set_mask) == set_mask ? 1 : 0;
        none_in += (t & set_mask) == 0 ? 1 : 0;
      }
      mpz_class prod_in = 1;
      mpz_class prod_out = 1;
      double product_in = 1.0;
      double product_out = 1.0;
      for (const EdgeId e : set) {
        const auto c = static_cast<std::uint64_t>(
            std::count_if(trees.begin(), trees.end(), [e](std::uint32_t t) { return (t >> e) & 1U; }));
        prod_in *= static_cast<unsigned long>(c);
        prod_out *= static_cast<unsigned long>(trees.size() - c);
        product_in *= ratio(c, trees.size());
        product_out *= ratio(trees.size() - c, trees.size());
      }
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), total.get_mpz_t(), set.size() - 1);
      auto& r = reports[s];
      r.edges = set;
      r.exact = true;
      r.seed = seed;
      r.trees = trees.size();
      // all_in / τ <= Π c_i / τ^k  <=>  all_in τ^(k-1) <= Π c_i
      r.inclusion = {ratio(all_in, trees.size()), product_in, 0.0,
                     mpz_class(static_cast<unsigned long>(all_in)) * scale <= prod_in};
      r.exclusion = {ratio(none_in, trees.size()), product_out, 0.0,
                     mpz_class(static_cast<unsigned long>(none_in)) * scale <= prod_out};
    }
    return reports;
  }

  if (trials == 0) throw InvalidArgument("Monte Carlo check needs trials >= 1");
  std::vector<Tally> tallies(edge_sets.size());
  for (std::size_t s = 0; s < edge_sets.size(); ++s) {
    const std::size_t k = edge_sets[s].size();
    tallies[s].single.assign(k, 0);
    tallies[s].pair.assign(k, std::vector<std::uint64_t>(k, 0));
  }
  std::vector<char> in_tree(g.num_edges(), 0);
  WalkOptions options;
  options.record_visits = false;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto sample = aldous_broder(g, seed.stream("stats.negative_correlation", i), options);
    for (const EdgeId e : sample.tree.edges) in_tree[e] = 1;
    for (std::size_t s = 0; s < edge_sets.size(); ++s) {
      const auto& set = edge_sets[s];
      auto& tally = tallies[s];
      std::size_t present = 0;
      for (std::size_t a = 0; a < set.size(); ++a) {
        if (!in_tree[set[a]]) continue;
        ++present;
        ++tally.single[a];
        for (std::size_t b = 0; b < set.size(); ++b) tally.pair[a][b] += in_tree[set[b]] ? 1 : 0;
      }
      tally.all_in += present == set.size() ? 1 : 0;
      tally.none_in += present == 0 ? 1 : 0;
    }
    for (const EdgeId e : sample.tree.edges) in_tree[e] = 0;
  }

  for (std::size_t s = 0; s < edge_sets.size(); ++s) {
    const auto& set = edge_sets[s];
    const auto& tally = tallies[s];
    const std::size_t k = set.size();
    std::vector<double> p(k);
    std::vector<double> q(k);
    std::vector<std::vector<double>> pp(k, std::vector<double>(k));
    std::vector<std::vector<double>> qq(k, std::vector<double>(k));
    for (std::size_t a = 0; a < k; ++a) {
      p[a] = ratio(tally.single[a], trials);
      q[a] = 1.0 - p[a];
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        pp[a][b] = ratio(tally.pair[a][b], trials);
        qq[a][b] = 1.0 - p[a] - p[b] + pp[a][b];
      }
      qq[a][a] = q[a];
    }
    auto& r = reports[s];
    r.edges = set;
    r.exact = false;
    r.trials = trials;
    r.seed = seed;
    auto fill = [&](CorrelationSide& side, double joint, const std::vector<double>& m,
                    const std::vector<std::vector<double>>& pj) {
      side.joint = joint;
      side.product = std::accumulate(m.begin(), m.end(), 1.0, std::multiplies<>());
      side.standard_error = difference_se(m, pj, joint, trials);
      side.holds = side.joint <= side.product + kStandardErrors * side.standard_error;
    };
    fill(r.inclusion, ratio(tally.all_in, trials), p, pp);
    fill(r.exclusion, ratio(tally.none_in, trials), q, qq);
  }
  return reports;
}

CorrelationReport negative_correlation_check(const Graph& g, std::span<const EdgeId> edges, std::size_t trials,
                                             Seed seed, CorrelationMode mode) {
  return negative_correlation_checks(g, {std::vector<EdgeId>(edges.begin(), edges.end())}, trials, seed, mode)
      .front();
}

bool TailCheckReport::holds() const {
  return std::all_of(points.begin(), points.end(), [](const TailPoint& p) { return p.holds; });
}

std::vector<TailCheckReport> chernoff_tail_checks(const Graph& g, const std::vector<VertexSubset>& cuts,
                                                  std::size_t trials, Seed seed,
                                                  std::span<const double> lambda_grid) {
  if (trials < 10000) throw InvalidArgument("tail check needs at least 10^4 trials");
  std::vector<std::vector<EdgeId>> cut_sets;
  for (const auto& a : cuts) cut_sets.push_back(cut_edges(g, a));

  std::vector<std::vector<std::uint32_t>> sums(cuts.size(), std::vector<std::uint32_t>(trials, 0));
  std::vector<char> in_tree(g.num_edges(), 0);
  WalkOptions options;
  options.record_visits = false;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto sample = aldous_broder(g, seed.stream("stats.chernoff_tail", i), options);
    for (const EdgeId e : sample.tree.edges) in_tree[e] = 1;
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      std::uint32_t s = 0;
      for (const EdgeId e : cut_sets[c]) s += in_tree[e] ? 1 : 0;
      sums[c][i] = s;
    }
    for (const EdgeId e : sample.tree.edges) in_tree[e] = 0;
  }

  std::vector<TailCheckReport> reports;
  const auto n_trials = static_cast<double>(trials);
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    TailCheckReport r;
    r.cut.assign(cuts[c].members().begin(), cuts[c].members().end());
    r.cut_edges = cut_sets[c].size();
    r.trials = trials;
    r.seed = seed;
    double total = 0.0;
    double total_sq = 0.0;
    for (const auto s : sums[c]) {
      total += s;
      total_sq += static_cast<double>(s) * s;
    }
    const double mean = total / n_trials;
    const double width = static_cast<double>(r.cut_edges);
    r.mean_probability = mean / width;
    r.mean_probability_se = std::sqrt(std::max(total_sq / n_trials - mean * mean, 0.0) / n_trials) / width;
    for (const double multiplier : lambda_grid) {
      TailPoint point;
      point.lambda = multiplier * std::sqrt(mean);
      const double threshold = mean - point.lambda;
      const auto below = std::count_if(sums[c].begin(), sums[c].end(),
                                       [threshold](std::uint32_t s) { return static_cast<double>(s) < threshold; });
      point.empirical = static_cast<double>(below) / n_trials;
      point.bound = mean > 0.0 ? std::exp(-point.lambda * point.lambda / (2.0 * mean)) : 1.0;
      point.standard_error = std::sqrt(point.empirical * (1.0 - point.empirical) / n_trials);
      point.holds = point.empirical <= point.bound + kStandardErrors * point.standard_error;
      r.points.push_back(point);
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

TailCheckReport chernoff_tail_check(const Graph& g, const VertexSubset& a, std::size_t trials, Seed seed,
                                    std::span<const double> lambda_grid) {
  return chernoff_tail_checks(g, {a}, trials, seed, lambda_grid).front();
}

MinEdgeReport min_tree_edge_probability(const Graph& g, std::size_t trials, Seed seed) {
  const auto freq = edge_inclusion_frequencies(g, trials, seed);
  MinEdgeReport r;
  r.trials = trials;
  if (freq.empty()) return r;
  const auto it = std::min_element(freq.begin(), freq.end());
  r.edge = static_cast<EdgeId>(it - freq.begin());
  r.probability = *it;
  r.standard_error = std::sqrt(r.probability * (1.0 - r.probability) / static_cast<double>(trials));
  return r;
}

std::uint64_t pruefer_index(std::size_t n, std::span<const Edge> edges) {
  if (n < 2 || n > 16) throw InvalidArgument("pruefer_index supports 2 <= n <= 16");
  if (edges.size() != n - 1) throw InvalidArgument("a tree on n vertices has n-1 edges");
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<char> removed(n, 0);
  std::uint64_t index = 0;
  for (std::size_t step = 0; step + 2 < n; ++step) {
    Vertex leaf = 0;
    while (removed[leaf] || degree[leaf] != 1) ++leaf;
    removed[leaf] = 1;
    for (const Vertex w : adj[leaf]) {
      if (!removed[w]) {
        index = index * n + w;
        --degree[w];
        break;
      }
    }
  }
  return index;
}

CouplingReport coupling_distance_estimate(std::size_t n, double p, std::size_t trials, Seed seed, RevisitRule rule) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("coupling estimate needs 0 < p <= 1");
  if (n < 2) throw InvalidArgument("coupling estimate needs n >= 2");
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  CouplingReport r;
  r.n = n;
  r.p = p;
  r.trials = trials;
  r.seed = seed;

  const bool direct = n <= 8;
  std::uint64_t tree_space = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) tree_space *= n;
  std::vector<std::uint64_t> bp_counts(direct ? tree_space + 1 : 0, 0);  // last slot: failure
  std::vector<std::uint64_t> ab_counts(direct ? tree_space : 0, 0);
  const Graph kn = direct ? complete_graph(n) : Graph();

  std::uint64_t failures = 0;
  ProcessBOptions options;
  options.rule = rule;
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < trials; ++i) {
    const Graph h = gnp_graph(n, p, seed.stream("stats.coupling.graph", i));
    const auto run = process_bp(h, p, seed.stream("stats.coupling.walk", i), options);
    if (!run.succeeded()) ++failures;
    if (!direct) continue;
    if (run.succeeded()) {
      pairs.clear();
      for (const EdgeId e : run.sample().tree.edges) pairs.push_back(h.edge(e));
      ++bp_counts[pruefer_index(n, pairs)];
    } else {
      ++bp_counts[tree_space];
    }
    WalkOptions walk;
    walk.record_visits = false;
    const auto reference = aldous_broder(kn, seed.stream("stats.coupling.reference", i), walk);
    pairs.clear();
    for (const EdgeId e : reference.tree.edges) pairs.push_back(kn.edge(e));
    ++ab_counts[pruefer_index(n, pairs)];
  }
  r.failure_rate = ratio(failures, trials);
  r.failure_se = std::sqrt(r.failure_rate * (1.0 - r.failure_rate) / static_cast<double>(trials));
  if (direct) {
    const double uniform = 1.0 / static_cast<double>(tree_space);
    double to_uniform = ratio(bp_counts[tree_space], trials);
    double to_reference = to_uniform;
    for (std::uint64_t t = 0; t < tree_space; ++t) {
      const double f = ratio(bp_counts[t], trials);
      to_uniform += std::abs(f - uniform);
      to_reference += std::abs(f - ratio(ab_counts[t], trials));
    }
    r.tv_to_uniform = to_uniform / 2.0;
    r.tv_to_aldous_broder = to_reference / 2.0;
  }
  return r;
}

namespace {

// True when seq visits the cycle's vertices consecutively in one direction.
bool goes_around(std::span<const Vertex> seq, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  if (seq.size() != k) return false;
  std::vector<std::size_t> pos(seq.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto it = std::find(cycle.begin(), cycle.end(), seq[i]);
    if (it == cycle.end()) return false;
    pos[i] = static_cast<std::size_t>(it - cycle.begin());
    for (std::size_t j = 0; j < i; ++j) {
      if (pos[j] == pos[i]) return false;
    }
  }
  if (k <= 2) return true;
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    forward = forward && pos[i + 1] == (pos[i] + 1) % k;
    backward = backward && pos[i] == (pos[i + 1] + 1) % k;
  }
  return forward || backward;
}

}  // namespace

bool lower_bound_event(const WalkTrace& trace, const PathGadget& gadget) {
  if (trace.visits.empty()) throw InvalidArgument("lower_bound_event needs recorded visits");
  std::uint64_t entry = trace.steps + 1;
  for (const Vertex v : gadget.outer_cycle) entry = std::min(entry, trace.first_visit[v]);
  for (const Vertex v : gadget.path) entry = std::min(entry, trace.first_visit[v]);
  if (entry == 0) throw InvalidArgument("walk must start outside the gadget");
  const std::size_t outer = gadget.outer_cycle.size();
  const std::size_t inner = gadget.path.size();
  if (entry + outer + inner > trace.visits.size()) return false;
  const std::span<const Vertex> window(trace.visits.data() + entry, outer + inner);
  return goes_around(window.first(outer), gadget.outer_cycle) && goes_around(window.subspan(outer), gadget.path);
}

std::size_t tree_cut_size(const SpanningTree& tree, std::span<const Vertex> side) {
  std::vector<char> in(tree.n, 0);
  for (const Vertex v : side) in[v] = 1;
  std::size_t cut = 0;
  for (Vertex v = 0; v < tree.n; ++v) {
    if (v != tree.root && in[v] != in[tree.parent[v]]) ++cut;
  }
  return cut;
}

LowerBoundEventReport measure_lower_bound_events(const LowerBoundFamily& family, std::size_t trees, Seed seed) {
  const Graph& g = family.graph;
  std::vector<char> taken(g.num_vertices(), 0);
  for (const auto& gadget : family.gadgets) {
    for (const Vertex v : gadget.path) taken[v] = 1;
    for (const Vertex v : gadget.outer_cycle) taken[v] = 1;
  }
  LowerBoundEventReport r;
  const auto free = std::find(taken.begin(), taken.end(), 0);
  if (free == taken.end()) throw InvalidArgument("no vertex outside the gadgets to start from");
  r.start = static_cast<Vertex>(free - taken.begin());
  r.trees = trees;
  const double exponent = static_cast<double>((family.degree + 1) * family.path_length) - 1.0;
  r.bound = std::pow(static_cast<double>(family.degree + 2), -exponent);

  WalkOptions options;
  options.start = r.start;
  options.record_visits = true;
  for (std::size_t t = 0; t < trees; ++t) {
    const auto sample = aldous_broder(g, seed.stream("stats.lower_bound.tree", t), options);
    for (const auto& gadget : family.gadgets) {
      ++r.observations;
      if (!lower_bound_event(sample.trace, gadget)) continue;
      ++r.hits;
      if (tree_cut_size(sample.tree, gadget.path) == 1) ++r.hits_with_single_edge_cut;
    }
  }
  if (r.observations > 0) {
    r.frequency = ratio(r.hits, r.observations);
    r.standard_error = std::sqrt(r.frequency * (1.0 - r.frequency) / static_cast<double>(r.observations));
  }
  return r;
}

}  // namespace splicers
