#ifndef SPLICERS_GENERATORS_HPP
#define SPLICERS_GENERATORS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "splicers/graph.hpp"
#include "splicers/rng.hpp"

namespace splicers {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Star K_{1,leaves}; vertex 0 is the center.
Graph star_graph(std::size_t leaves);
/// Wheel on n vertices: hub 0 joined to a rim cycle 1..n-1.
Graph wheel_graph(std::size_t n);
/// Triangular prism C_3 x K_2.
Graph prism_graph();
Graph petersen_graph();
/// C_n plus the chord {0, 2}.
Graph cycle_with_chord(std::size_t n);

/// Erdos-Renyi G(n,p). Pairs are visited in lexicographic order, one
/// Bernoulli draw each.
Graph gnp_graph(std::size_t n, double p, Seed seed);

/// Uniform simple d-regular graph by the configuration model, rejecting
/// pairings with loops or multi-edges. Throws SamplingFailure after
/// `max_attempts` rejected pairings.
Graph random_regular_graph(std::size_t n, std::size_t d, Seed seed, std::size_t max_attempts = 100000);

/// One selected subpath P of the Hamiltonian path with its two cycles:
/// the path cycle C2(P) runs through `path` in order and closes with the
/// endpoint edge; the outer cycle C1(P) runs through Γ'(P) in ascending order.
struct PathGadget {
  std::vector<Vertex> path;
  std::vector<Vertex> outer_cycle;
};

/// A bounded-degree expander with planted subpaths whose spanning-tree cuts
/// are likely to be tiny.
struct LowerBoundFamily {
  Graph graph;
  Graph base;  ///< d-regular: Hamiltonian cycle 0..n-1 plus d-2 random perfect matchings
  std::vector<PathGadget> gadgets;  ///< the pairwise non-interacting set I
  std::size_t degree = 0;
  std::size_t path_length = 0;
  std::size_t candidate_paths = 0;  ///< floor(n / ell) full-length subpaths considered
};

/// Throws ParametersTooTight if the greedy selection leaves I empty, and
/// InvalidArgument for d < 3, ell < 1, odd n or n <= d.
LowerBoundFamily lower_bound_family(std::size_t n, std::size_t d, std::size_t ell, Seed seed);

/// Structural check of every LowerBoundFamily invariant. Returns one message
/// per violation; empty means valid.
std::vector<std::string> validate_lower_bound_family(const LowerBoundFamily& family);

/// Orientation probabilities of D_p(H) for one undirected edge.
struct DpProbabilities {
  double both;
  double forward;   ///< only (u, v)
  double backward;  ///< only (v, u)
  double arc_marginal;  ///< q = 1 - sqrt(1 - p) when H ~ G(n,p)
};

DpProbabilities dp_probabilities(double p);

/// Random orientation D_p(H): every edge independently becomes both arcs,
/// only (u,v) or only (v,u) with the probabilities above (u < v).
DirectedGraph direct_edges_dp(const Graph& h, double p, Seed seed);

}  // namespace splicers

#endif  // SPLICERS_GENERATORS_HPP
