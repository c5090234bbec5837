#include "splicers/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "splicers/errors.hpp"

namespace splicers {

namespace {

Vertex vtx(std::size_t v) { return static_cast<Vertex>(v); }

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("probability must lie in [0, 1]");
}

}  // namespace

Graph complete_graph(std::size_t n) {
  if (n < 2) throw InvalidArgument("complete graph needs n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({vtx(u), vtx(v)});
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({vtx(v), vtx((v + 1) % n)});
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({vtx(v), vtx(v + 1)});
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw InvalidArgument("star needs at least one leaf");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, vtx(v)});
  return Graph(leaves + 1, edges);
}

Graph wheel_graph(std::size_t n) {
  if (n < 4) throw InvalidArgument("wheel needs n >= 4");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({0, vtx(v)});
  for (std::size_t v = 1; v < n; ++v) edges.push_back({vtx(v), vtx(v + 1 < n ? v + 1 : 1)});
  return Graph(n, edges);
}

Graph prism_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 5; ++v) {
    edges.push_back({v, static_cast<Vertex>((v + 1) % 5)});          // outer 5-cycle
    edges.push_back({v, static_cast<Vertex>(v + 5)});                // spokes
    edges.push_back({static_cast<Vertex>(v + 5), static_cast<Vertex>((v + 2) % 5 + 5)});  // pentagram
  }
  return Graph(10, edges);
}

Graph cycle_with_chord(std::size_t n) {
  if (n < 4) throw InvalidArgument("cycle with chord needs n >= 4");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({vtx(v), vtx((v + 1) % n)});
  edges.push_back({0, 2});
  return Graph(n, edges);
}

Graph gnp_graph(std::size_t n, double p, Seed seed) {
  require_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({vtx(u), vtx(v)});
    }
  }
  return Graph(n, edges);
}

Graph random_regular_graph(std::size_t n, std::size_t d, Seed seed, std::size_t max_attempts) {
  if (n == 0 || d >= n) throw InvalidArgument("random regular graph needs d < n");
  if ((n * d) % 2 != 0) throw InvalidArgument("n * d must be even");
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), d, vtx(v));

  std::vector<Edge> edges(n * d / 2);
  std::vector<std::uint64_t> keys(edges.size());
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(seed.stream("graph_core.random_regular.attempt", attempt));
    shuffle(stubs.begin(), stubs.end(), rng);
    bool simple = true;
    for (std::size_t i = 0; i < edges.size() && simple; ++i) {
      const Vertex a = stubs[2 * i];
      const Vertex b = stubs[2 * i + 1];
      if (a == b) simple = false;
      edges[i] = Edge{std::min(a, b), std::max(a, b)};
      keys[i] = (static_cast<std::uint64_t>(edges[i].u) << 32) | edges[i].v;
    }
    if (!simple) continue;
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;
    return Graph(n, edges);
  }
  throw SamplingFailure("random_regular_graph: no simple pairing after " +
                        std::to_string(max_attempts) + " attempts");
}

LowerBoundFamily lower_bound_family(std::size_t n, std::size_t d, std::size_t ell, Seed seed) {
  if (d < 3) throw InvalidArgument("lower-bound family needs d >= 3");
  if (ell < 1) throw InvalidArgument("path length must be at least 1");
  if (n % 2 != 0 || n <= d) throw InvalidArgument("lower-bound family needs even n > d");

  // Base expander: Hamiltonian cycle 0-1-...-(n-1)-0 plus d-2 perfect matchings.
  std::vector<Edge> base_edges;
  std::set<std::pair<Vertex, Vertex>> present;
  for (std::size_t v = 0; v < n; ++v) {
    const Edge e{std::min(vtx(v), vtx((v + 1) % n)), std::max(vtx(v), vtx((v + 1) % n))};
    base_edges.push_back(e);
    present.insert({e.u, e.v});
  }
  constexpr std::size_t kMatchingAttempts = 10000;
  std::vector<Vertex> order(n);
  for (std::size_t m = 0; m + 2 < d; ++m) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kMatchingAttempts && !placed; ++attempt) {
      Rng rng(seed.stream("graph_core.lower_bound.matching", m * kMatchingAttempts + attempt));
      std::iota(order.begin(), order.end(), Vertex{0});
      shuffle(order.begin(), order.end(), rng);
      bool clash = false;
      for (std::size_t i = 0; i < n && !clash; i += 2) {
        clash = present.count({std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1])}) > 0;
      }
      if (clash) continue;
      for (std::size_t i = 0; i < n; i += 2) {
        const Edge e{std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1])};
        base_edges.push_back(e);
        present.insert({e.u, e.v});
      }
      placed = true;
    }
    if (!placed) throw SamplingFailure("lower_bound_family: could not place a perfect matching");
  }

  LowerBoundFamily family;
  family.base = Graph(n, base_edges);
  family.degree = d;
  family.path_length = ell;
  family.candidate_paths = n / ell;

  // Greedy non-interacting selection: closed neighborhoods must be disjoint.
  std::vector<char> owned(n, 0);
  for (std::size_t i = 0; i < family.candidate_paths; ++i) {
    std::vector<Vertex> path(ell);
    std::iota(path.begin(), path.end(), vtx(i * ell));
    const VertexSubset in_path(n, path);
    auto boundary = outer_boundary(family.base, in_path);
    const bool free = std::none_of(path.begin(), path.end(), [&](Vertex v) { return owned[v] != 0; }) &&
                      std::none_of(boundary.begin(), boundary.end(), [&](Vertex v) { return owned[v] != 0; });
    if (!free) continue;
    for (const Vertex v : path) owned[v] = 1;
    for (const Vertex v : boundary) owned[v] = 1;
    family.gadgets.push_back(PathGadget{std::move(path), std::move(boundary)});
  }
  if (family.gadgets.empty()) {
    throw ParametersTooTight("lower_bound_family: no non-interacting subpath for n=" + std::to_string(n) +
                             ", d=" + std::to_string(d) + ", ell=" + std::to_string(ell));
  }

  std::vector<Edge> edges = base_edges;
  auto add_missing = [&](Vertex a, Vertex b) {
    const std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
    if (a != b && present.insert(key).second) edges.push_back(Edge{key.first, key.second});
  };
  for (const auto& gadget : family.gadgets) {
    if (gadget.path.size() >= 3) add_missing(gadget.path.front(), gadget.path.back());
    const auto& cycle = gadget.outer_cycle;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) add_missing(cycle[i], cycle[i + 1]);
    if (cycle.size() >= 3) add_missing(cycle.back(), cycle.front());
  }
  family.graph = Graph(n, edges);
  return family;
}

namespace {

bool cycle_edges_present(const Graph& g, const std::vector<Vertex>& cycle) {
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[i + 1])) return false;
  }
  return cycle.size() < 3 || g.has_edge(cycle.back(), cycle.front());
}

}  // namespace

std::vector<std::string> validate_lower_bound_family(const LowerBoundFamily& family) {
  std::vector<std::string> problems;
  const Graph& g = family.graph;
  const std::size_t n = g.num_vertices();
  const std::size_t d = family.degree;
  const std::size_t ell = family.path_length;

  for (Vertex v = 0; v < n; ++v) {
    if (family.base.degree(v) != d) {
      problems.push_back("base vertex " + std::to_string(v) + " has degree " +
                         std::to_string(family.base.degree(v)));
      break;
    }
  }
  for (const auto& e : family.base.edges()) {
    if (!g.has_edge(e.u, e.v)) {
      problems.push_back("base edge missing from graph");
      break;
    }
  }
  if (g.max_degree() > d + 2) {
    problems.push_back("max degree " + std::to_string(g.max_degree()) + " exceeds d+2");
  }
  const std::size_t required = n / (d * d * ell * ell);
  if (family.gadgets.size() < required) {
    problems.push_back("|I| = " + std::to_string(family.gadgets.size()) + " below n/(d^2 ell^2) = " +
                       std::to_string(required));
  }

  std::vector<std::size_t> owner(n, family.gadgets.size());
  for (std::size_t i = 0; i < family.gadgets.size(); ++i) {
    const auto& gadget = family.gadgets[i];
    const auto& path = gadget.path;
    if (path.size() != ell) problems.push_back("path " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      if (path[j + 1] != path[j] + 1) {
        problems.push_back("path " + std::to_string(i) + " is not a Hamiltonian-path segment");
        break;
      }
    }
    if (!cycle_edges_present(g, path)) problems.push_back("C2 of path " + std::to_string(i) + " is not a cycle of the graph");
    if (!cycle_edges_present(g, gadget.outer_cycle)) {
      problems.push_back("C1 of path " + std::to_string(i) + " is not a cycle of the graph");
    }
    const VertexSubset in_path(n, path);
    const auto boundary_base = outer_boundary(family.base, in_path);
    const auto boundary_full = outer_boundary(g, in_path);
    auto sorted_cycle = gadget.outer_cycle;
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    if (sorted_cycle != boundary_base || boundary_base != boundary_full) {
      problems.push_back("C1 of path " + std::to_string(i) + " is not the outer boundary of the path");
    }
    auto claim = [&](Vertex v) {
      if (owner[v] != family.gadgets.size() && owner[v] != i) {
        problems.push_back("paths " + std::to_string(owner[v]) + " and " + std::to_string(i) + " interact");
      }
      owner[v] = i;
    };
    for (const Vertex v : path) claim(v);
    for (const Vertex v : boundary_full) claim(v);
  }
  return problems;
}

DpProbabilities dp_probabilities(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("D_p orientation needs 0 < p <= 1");
  // q^2/p and (p-q)/p are the orientation probabilities rewritten without
  // the cancellation in 2 - p - 2 sqrt(1-p) for small p.
  const double q = 1.0 - std::sqrt(1.0 - p);
  const double both = q * q / p;
  const double single = (p - q) / p;
  return DpProbabilities{both, single, single, q};
}

DirectedGraph direct_edges_dp(const Graph& h, double p, Seed seed) {
  const auto probs = dp_probabilities(p);
  Rng rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(h.num_edges() * 2);
  for (EdgeId id = 0; id < h.num_edges(); ++id) {
    const auto [u, v] = h.edge(id);
    const double r = rng.uniform01();
    if (r < probs.both) {
      arcs.push_back({u, v, id});
      arcs.push_back({v, u, id});
    } else if (r < probs.both + probs.forward) {
      arcs.push_back({u, v, id});
    } else {
      arcs.push_back({v, u, id});
    }
  }
  return DirectedGraph(h.num_vertices(), std::move(arcs));
}

}  // namespace splicers
