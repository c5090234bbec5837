// Independent reference computations for the tests. Deliberately naive.
#ifndef SPLICERS_TESTS_ORACLES_HPP
#define SPLICERS_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "splicers/graph.hpp"

namespace oracle {

using splicers::Edge;
using splicers::EdgeId;
using splicers::Graph;
using splicers::Vertex;

// Determinant by rational Gaussian elimination with row swaps.
inline mpq_class determinant(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Laplacian with the listed vertices removed.
inline std::vector<std::vector<mpq_class>> reduced_laplacian(const Graph& g, const std::set<Vertex>& drop) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!drop.count(v)) keep.push_back(v);
  }
  std::vector<std::vector<mpq_class>> m(keep.size(), std::vector<mpq_class>(keep.size(), 0));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i == j) m[i][j] = static_cast<unsigned long>(g.degree(keep[i]));
      else if (g.has_edge(keep[i], keep[j])) m[i][j] = -1;
    }
  }
  return m;
}

inline mpq_class tree_count(const Graph& g) { return determinant(reduced_laplacian(g, {0})); }

inline mpq_class resistance(const Graph& g, Vertex u, Vertex v) {
  return determinant(reduced_laplacian(g, {u, v})) / determinant(reduced_laplacian(g, {u}));
}

// Counts spanning trees by recursive choice of n-1 edges and a
// connectivity check by repeated relabelling.
inline std::vector<std::vector<EdgeId>> all_spanning_trees(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> chosen;
  std::function<void(EdgeId)> rec = [&](EdgeId next) {
    if (chosen.size() == n - 1) {
      std::vector<Vertex> label(n);
      for (Vertex v = 0; v < n; ++v) label[v] = v;
      for (bool changed = true; changed;) {
        changed = false;
        for (const EdgeId e : chosen) {
          const auto [u, v] = g.edge(e);
          const Vertex m = std::min(label[u], label[v]);
          if (label[u] != m || label[v] != m) {
            label[u] = label[v] = m;
            changed = true;
          }
        }
      }
      if (std::all_of(label.begin(), label.end(), [](Vertex l) { return l == 0; })) out.push_back(chosen);
      return;
    }
    for (EdgeId e = next; e < g.num_edges(); ++e) {
      chosen.push_back(e);
      rec(e + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

struct Expansion {
  double edge = std::numeric_limits<double>::infinity();
  double vertex = std::numeric_limits<double>::infinity();
};

// Every subset with 1 <= |A| <= n/2.
inline Expansion brute_force_expansion(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Expansion best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size > n / 2) continue;
    std::size_t cut = 0;
    for (const auto& e : g.edges()) cut += ((mask >> e.u) & 1) != ((mask >> e.v) & 1) ? 1 : 0;
    std::set<Vertex> outside;
    for (const auto& e : g.edges()) {
      if (((mask >> e.u) & 1) && !((mask >> e.v) & 1)) outside.insert(e.v);
      if (((mask >> e.v) & 1) && !((mask >> e.u) & 1)) outside.insert(e.u);
    }
    best.edge = std::min(best.edge, static_cast<double>(cut) / size);
    best.vertex = std::min(best.vertex, static_cast<double>(outside.size()) / size);
  }
  return best;
}

}  // namespace oracle

#endif  // SPLICERS_TESTS_ORACLES_HPP
