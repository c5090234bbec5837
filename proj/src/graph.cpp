#include "splicers/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "splicers/errors.hpp"

namespace splicers {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  edges_.reserve(edges.size());
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    }
    edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
    ++degree[e.u];
    ++degree[e.v];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  incidences_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto [u, v] = edges_[id];
    incidences_[fill[u]++] = Incidence{v, id};
    incidences_[fill[v]++] = Incidence{u, id};
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = incidences_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = incidences_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Incidence& a, const Incidence& b) {
      return a.neighbor < b.neighbor;
    });
    const auto dup = std::adjacent_find(first, last, [](const Incidence& a, const Incidence& b) {
      return a.neighbor == b.neighbor;
    });
    if (dup != last) {
      throw InvalidArgument("duplicate edge (" + std::to_string(std::min<std::size_t>(v, dup->neighbor)) +
                            ", " + std::to_string(std::max<std::size_t>(v, dup->neighbor)) + ")");
    }
  }
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::size_t Graph::min_degree() const {
  if (n_ == 0) return 0;
  std::size_t best = degree(0);
  for (std::size_t v = 1; v < n_; ++v) best = std::min(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto adj = neighbors(u);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v,
                                   [](const Incidence& inc, Vertex w) { return inc.neighbor < w; });
  if (it == adj.end() || it->neighbor != v) return std::nullopt;
  return it->edge;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  const auto labels = component_labels(*this);
  return std::all_of(labels.begin(), labels.end(), [](std::uint32_t c) { return c == 0; });
}

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  offsets_.assign(n + 1, 0);
  for (const auto& a : arcs_) {
    if (a.from >= n || a.to >= n || a.from == a.to) {
      throw InvalidArgument("invalid arc (" + std::to_string(a.from) + ", " + std::to_string(a.to) + ")");
    }
    ++offsets_[a.from + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  out_.resize(arcs_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t id = 0; id < arcs_.size(); ++id) {
    out_[fill[arcs_[id].from]++] = OutArc{arcs_[id].to, id};
  }
}

VertexSubset::VertexSubset(std::size_t universe, std::span<const Vertex> members)
    : member_(universe, 0), members_(members.begin(), members.end()) {
  for (const Vertex v : members_) {
    if (v >= universe) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    if (member_[v]) throw InvalidArgument("vertex " + std::to_string(v) + " repeated in subset");
    member_[v] = 1;
  }
  std::sort(members_.begin(), members_.end());
}

VertexSubset VertexSubset::complement() const {
  std::vector<Vertex> rest;
  rest.reserve(universe() - size());
  for (std::size_t v = 0; v < universe(); ++v) {
    if (!member_[v]) rest.push_back(static_cast<Vertex>(v));
  }
  return VertexSubset(universe(), rest);
}

namespace {

void require_proper(const Graph& g, const VertexSubset& a) {
  if (a.universe() != g.num_vertices()) {
    throw InvalidArgument("vertex subset universe does not match graph size");
  }
  if (!a.is_proper()) throw InvalidArgument("cut side must be nonempty and not the whole vertex set");
}

}  // namespace

std::vector<EdgeId> cut_edges(const Graph& g, const VertexSubset& a) {
  require_proper(g, a);
  std::vector<EdgeId> cut;
  for (const Vertex v : a.members()) {
    for (const auto& inc : g.neighbors(v)) {
      if (!a.contains(inc.neighbor)) cut.push_back(inc.edge);
    }
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

std::size_t cut_size(const Graph& g, const VertexSubset& a) {
  require_proper(g, a);
  std::size_t count = 0;
  for (const Vertex v : a.members()) {
    for (const auto& inc : g.neighbors(v)) count += a.contains(inc.neighbor) ? 0 : 1;
  }
  return count;
}

std::vector<Vertex> outer_boundary(const Graph& g, const VertexSubset& a) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> boundary;
  for (const Vertex v : a.members()) {
    for (const auto& inc : g.neighbors(v)) {
      if (!a.contains(inc.neighbor) && !seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        boundary.push_back(inc.neighbor);
      }
    }
  }
  std::sort(boundary.begin(), boundary.end());
  return boundary;
}

std::vector<std::uint32_t> component_labels(const Graph& g, std::span<const char> removed) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.num_vertices(), kUnset);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(v)) {
        if (!removed.empty() && removed[inc.edge]) continue;
        if (label[inc.neighbor] == kUnset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> frontier{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex v = frontier[head];
    for (const auto& inc : g.neighbors(v)) {
      if (dist[inc.neighbor] < 0) {
        dist[inc.neighbor] = dist[v] + 1;
        frontier.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (const EdgeId e : keep) edges.push_back(g.edge(e));
  return Graph(g.num_vertices(), edges);
}

}  // namespace splicers
