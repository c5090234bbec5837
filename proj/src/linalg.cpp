#include "splicers/linalg.hpp"

#include <algorithm>
#include <utility>

#include "splicers/errors.hpp"

namespace splicers {

Eigen::SparseMatrix<double> laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(g.num_vertices() + 2 * g.num_edges());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    entries.emplace_back(v, v, static_cast<double>(g.degree(v)));
  }
  for (const auto& [u, v] : g.edges()) {
    entries.emplace_back(u, v, -1.0);
    entries.emplace_back(v, u, -1.0);
  }
  Eigen::SparseMatrix<double> l(n, n);
  l.setFromTriplets(entries.begin(), entries.end());
  return l;
}

Eigen::MatrixXd dense_laplacian(const Graph& g) { return Eigen::MatrixXd(laplacian(g)); }

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Laplacian as an integer matrix with the listed vertices' rows and columns
// removed.
std::vector<std::vector<mpz_class>> reduced_laplacian(const Graph& g, std::vector<Vertex> removed) {
  const std::size_t n = g.num_vertices();
  std::vector<long> index(n, -1);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) index[v] = static_cast<long>(next++);
  }
  std::vector<std::vector<mpz_class>> m(next, std::vector<mpz_class>(next, 0));
  for (Vertex v = 0; v < n; ++v) {
    if (index[v] >= 0) m[index[v]][index[v]] = static_cast<unsigned long>(g.degree(v));
  }
  for (const auto& [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) {
      m[index[u]][index[v]] = -1;
      m[index[v]][index[u]] = -1;
    }
  }
  return m;
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw InvalidArgument("effective resistance needs a connected graph");
}

// Grounded sparse solver: vertex `ground` is pinned to potential zero.
class GroundedSolver {
 public:
  GroundedSolver(const Graph& g, Vertex ground) : n_(g.num_vertices()), ground_(ground) {
    const Eigen::SparseMatrix<double> full = laplacian(g);
    std::vector<Eigen::Triplet<double>> entries;
    for (Eigen::Index col = 0; col < full.outerSize(); ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(full, col); it; ++it) {
        if (it.row() == ground_ || it.col() == ground_) continue;
        entries.emplace_back(shift(it.row()), shift(it.col()), it.value());
      }
    }
    reduced_.resize(static_cast<Eigen::Index>(n_ - 1), static_cast<Eigen::Index>(n_ - 1));
    reduced_.setFromTriplets(entries.begin(), entries.end());
    solver_.compute(reduced_);
    if (solver_.info() != Eigen::Success) throw ConvergenceError("Laplacian factorization failed");
  }

  // Potentials (ground at zero) for injecting +1 at `source`, -1 at `sink`.
  Eigen::VectorXd potentials(Vertex source, Vertex sink) const {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_ - 1));
    if (source != ground_) rhs[shift(source)] += 1.0;
    if (sink != ground_) rhs[shift(sink)] -= 1.0;
    Eigen::VectorXd x = solver_.solve(rhs);
    for (int step = 0; step < 3; ++step) {
      const Eigen::VectorXd residual = rhs - reduced_ * x;
      if (residual.lpNorm<Eigen::Infinity>() == 0.0) break;
      x += solver_.solve(residual);
    }
    return x;
  }

  double potential(const Eigen::VectorXd& x, Vertex v) const { return v == ground_ ? 0.0 : x[shift(v)]; }

 private:
  Eigen::Index shift(Eigen::Index v) const { return v > ground_ ? v - 1 : v; }

  std::size_t n_;
  Eigen::Index ground_;
  Eigen::SparseMatrix<double> reduced_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver_;
};

}  // namespace

mpz_class spanning_tree_count(const Graph& g) {
  if (g.num_vertices() <= 1) return 1;
  return bareiss_determinant(reduced_laplacian(g, {0}));
}

mpq_class effective_resistance_exact(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.num_vertices() || v >= g.num_vertices()) throw InvalidArgument("vertex out of range");
  if (u == v) return 0;
  const mpz_class trees = bareiss_determinant(reduced_laplacian(g, {u}));
  if (trees == 0) throw InvalidArgument("effective resistance needs a connected graph");
  mpq_class r(bareiss_determinant(reduced_laplacian(g, {u, v})), trees);
  r.canonicalize();
  return r;
}

double effective_resistance(const Graph& g, EdgeId e) {
  if (e >= g.num_edges()) throw InvalidArgument("edge id out of range");
  const auto [u, v] = g.edge(e);
  if (g.num_vertices() <= kExactLinalgLimit) return effective_resistance_exact(g, u, v).get_d();
  require_connected(g);
  const GroundedSolver solver(g, u);
  const auto x = solver.potentials(v, u);
  return solver.potential(x, v);
}

std::vector<double> effective_resistances(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.num_vertices();
  std::vector<double> result(g.num_edges());
  if (n <= 1) return result;

  if (n <= kExactLinalgLimit) {
    // Exact inverse of the Laplacian grounded at vertex n-1, by Gauss-Jordan
    // over the rationals. R(u,v) = M_uu + M_vv - 2 M_uv with M_{n-1,*} = 0.
    const std::size_t m = n - 1;
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(2 * m, 0));
    for (Vertex v = 0; v < m; ++v) {
      a[v][v] = static_cast<unsigned long>(g.degree(v));
      a[v][m + v] = 1;
    }
    for (const auto& [u, v] : g.edges()) {
      if (u < m && v < m) {
        a[u][v] = -1;
        a[v][u] = -1;
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t pivot = k;
      while (a[pivot][k] == 0) ++pivot;  // nonsingular: connected graph
      std::swap(a[k], a[pivot]);
      const mpq_class inv = 1 / a[k][k];
      for (auto& x : a[k]) x *= inv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == k || a[i][k] == 0) continue;
        const mpq_class factor = a[i][k];
        for (std::size_t j = k; j < 2 * m; ++j) a[i][j] -= factor * a[k][j];
      }
    }
    auto entry = [&](Vertex r, Vertex c) -> mpq_class {
      if (r == m || c == m) return 0;
      return a[r][m + c];
    };
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const auto [u, v] = g.edge(id);
      const mpq_class r = entry(u, u) + entry(v, v) - 2 * entry(u, v);
      result[id] = r.get_d();
    }
    return result;
  }

  const GroundedSolver solver(g, static_cast<Vertex>(n - 1));
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const auto [u, v] = g.edge(id);
    const auto x = solver.potentials(u, v);
    result[id] = solver.potential(x, u) - solver.potential(x, v);
  }
  return result;
}

}  // namespace splicers
