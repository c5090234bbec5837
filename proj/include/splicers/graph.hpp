#ifndef SPLICERS_GRAPH_HPP
#define SPLICERS_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace splicers {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  [[nodiscard]] Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Immutable simple undirected graph. Edge ids are dense and follow the order
/// in which edges were supplied; each adjacency list is sorted by neighbor.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgument on self-loops, duplicate edges or out-of-range
  /// endpoints. Endpoints may be given in either order.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] std::size_t num_vertices() const { return n_; }
  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }

  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_[e]; }
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }

  [[nodiscard]] std::span<const Incidence> neighbors(Vertex v) const {
    return {incidences_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] std::size_t max_degree() const;
  [[nodiscard]] std::size_t min_degree() const;

  /// Binary search in the adjacency of the lower-degree endpoint.
  [[nodiscard]] std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  [[nodiscard]] bool is_connected() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

struct Arc {
  Vertex from;
  Vertex to;
  EdgeId source_edge;  // the undirected edge of the source graph
};

struct OutArc {
  Vertex to;
  std::uint32_t arc;
};

/// Immutable directed graph whose arcs are orientations of a source graph's
/// edges. Out-lists are in arc-id order.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::size_t n, std::vector<Arc> arcs);

  [[nodiscard]] std::size_t num_vertices() const { return n_; }
  [[nodiscard]] std::size_t num_arcs() const { return arcs_.size(); }
  [[nodiscard]] const Arc& arc(std::uint32_t a) const { return arcs_[a]; }
  [[nodiscard]] std::span<const Arc> arcs() const { return arcs_; }
  [[nodiscard]] std::span<const OutArc> out(Vertex v) const {
    return {out_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  [[nodiscard]] std::size_t out_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_{0};
  std::vector<OutArc> out_;
};

/// A vertex subset with O(1) membership. Members are kept sorted.
class VertexSubset {
 public:
  /// Throws InvalidArgument on out-of-range or repeated members.
  VertexSubset(std::size_t universe, std::span<const Vertex> members);

  [[nodiscard]] bool contains(Vertex v) const { return member_[v] != 0; }
  [[nodiscard]] std::span<const Vertex> members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] std::size_t universe() const { return member_.size(); }
  [[nodiscard]] bool is_proper() const { return !members_.empty() && members_.size() < member_.size(); }
  [[nodiscard]] VertexSubset complement() const;

 private:
  std::vector<char> member_;
  std::vector<Vertex> members_;
};

/// δ(A): edges with exactly one endpoint in A. A must be proper and nonempty.
std::vector<EdgeId> cut_edges(const Graph& g, const VertexSubset& a);
std::size_t cut_size(const Graph& g, const VertexSubset& a);

/// Γ'(A): vertices outside A adjacent to A, sorted.
std::vector<Vertex> outer_boundary(const Graph& g, const VertexSubset& a);

/// Component label per vertex, labels dense from 0 in vertex order. Edges
/// flagged in `removed` (indexed by edge id) are ignored when non-empty.
std::vector<std::uint32_t> component_labels(const Graph& g, std::span<const char> removed = {});

/// BFS hop distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

/// Subgraph of g on all its vertices keeping the listed edges (new ids follow
/// the order of `keep`).
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep);

}  // namespace splicers

#endif  // SPLICERS_GRAPH_HPP
