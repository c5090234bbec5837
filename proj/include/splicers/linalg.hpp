#ifndef SPLICERS_LINALG_HPP
#define SPLICERS_LINALG_HPP

#include <gmpxx.h>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "splicers/graph.hpp"

namespace splicers {

/// Graphs up to this size get exact rational answers; larger ones use a
/// sparse factorization with iterative refinement.
inline constexpr std::size_t kExactLinalgLimit = 64;

Eigen::SparseMatrix<double> laplacian(const Graph& g);
Eigen::MatrixXd dense_laplacian(const Graph& g);

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Every intermediate division is exact.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

/// Kirchhoff count: determinant of the Laplacian with vertex 0 removed.
/// Zero for disconnected graphs; 1 for a single vertex.
mpz_class spanning_tree_count(const Graph& g);

/// Exact resistance between any two vertices with unit resistors, as the
/// ratio of Laplacian minors det L[-u,-v] / det L[-u]. Throws
/// InvalidArgument when g is disconnected.
mpq_class effective_resistance_exact(const Graph& g, Vertex u, Vertex v);

/// Effective resistance across edge e: exact for n <= kExactLinalgLimit,
/// otherwise a grounded sparse LDLT solve refined to ~1e-12 relative.
double effective_resistance(const Graph& g, EdgeId e);

/// Effective resistances of all edges, indexed by edge id. Uses one exact
/// inverse of the grounded Laplacian for small graphs and one sparse
/// factorization otherwise.
std::vector<double> effective_resistances(const Graph& g);

}  // namespace splicers

#endif  // SPLICERS_LINALG_HPP
