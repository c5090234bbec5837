#include "splicers/cut_analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

#include "splicers/errors.hpp"
#include "splicers/tree_sampler.hpp"

namespace splicers {

std::string_view to_string(ExpansionKind kind) { return kind == ExpansionKind::kEdge ? "edge" : "vertex"; }

std::string_view to_string(ExpansionMethod method) {
  switch (method) {
    case ExpansionMethod::kExact: return "exact";
    case ExpansionMethod::kSpectralBound: return "spectral-bound";
    case ExpansionMethod::kSampled: return "sampled";
  }
  return "unknown";
}

std::string_view to_string(CutFamily family) {
  switch (family) {
    case CutFamily::kRandomSubset: return "random-subset";
    case CutFamily::kMinDegreeSingleton: return "min-degree-singleton";
    case CutFamily::kTreeInduced: return "tree-induced";
    case CutFamily::kBfsBall: return "bfs-ball";
  }
  return "unknown";
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> masks(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges()) {
    masks[u] |= Mask{1} << v;
    masks[v] |= Mask{1} << u;
  }
  return masks;
}

std::vector<Vertex> mask_members(Mask mask) {
  std::vector<Vertex> members;
  while (mask != 0) {
    members.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return members;
}

template <typename Measure>
ExpansionReport exhaustive_scan(const Graph& g, ExpansionKind kind, Measure measure) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw InvalidArgument("expansion needs at least 2 vertices");
  if (n > kExactExpansionLimit) {
    throw InvalidArgument("exhaustive expansion is limited to n <= " + std::to_string(kExactExpansionLimit) +
                          "; use spectral_lower_bound or sampled_cut_ratios");
  }
  const auto nbr = neighbor_masks(g);
  const Mask all = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  const std::size_t half = n / 2;

  ExpansionReport best;
  best.kind = kind;
  best.method = ExpansionMethod::kExact;
  bool found = false;
  Mask best_set = 0;
  auto consider = [&](Mask a) {
    const auto size = static_cast<std::size_t>(std::popcount(a));
    const std::size_t numer = measure(nbr, a, all);
    // numer/size < best.numerator/best.denominator
    if (!found || numer * best.denominator < best.numerator * size) {
      found = true;
      best.numerator = numer;
      best.denominator = size;
      best_set = a;
    }
  };
  const Mask limit = Mask{1} << (n - 1);
  for (Mask rest = 0; rest < limit; ++rest) {
    const Mask a = (rest << 1) | 1;
    const auto size = static_cast<std::size_t>(std::popcount(a));
    if (size == n) continue;
    if (size <= half) consider(a);
    if (n - size <= half) consider(all & ~a);
  }
  best.value = static_cast<double>(best.numerator) / static_cast<double>(best.denominator);
  best.witness = mask_members(best_set);
  return best;
}

std::size_t mask_cut(const std::vector<Mask>& nbr, Mask a, Mask all) {
  std::size_t cut = 0;
  const Mask outside = all & ~a;
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    cut += static_cast<std::size_t>(std::popcount(nbr[std::countr_zero(rest)] & outside));
  }
  return cut;
}

std::size_t mask_boundary(const std::vector<Mask>& nbr, Mask a, Mask all) {
  Mask reach = 0;
  for (Mask rest = a; rest != 0; rest &= rest - 1) reach |= nbr[std::countr_zero(rest)];
  return static_cast<std::size_t>(std::popcount(reach & all & ~a));
}

}  // namespace

ExpansionReport edge_expansion_exact(const Graph& g) {
  return exhaustive_scan(g, ExpansionKind::kEdge, mask_cut);
}

ExpansionReport vertex_expansion_exact(const Graph& g) {
  return exhaustive_scan(g, ExpansionKind::kVertex, mask_boundary);
}

double edge_expansion_of(const Graph& g, const VertexSubset& a) {
  return static_cast<double>(cut_size(g, a)) / static_cast<double>(a.size());
}

double vertex_expansion_of(const Graph& g, const VertexSubset& a) {
  if (a.universe() != g.num_vertices() || !a.is_proper()) throw InvalidArgument("set must be proper and nonempty");
  return static_cast<double>(outer_boundary(g, a).size()) / static_cast<double>(a.size());
}

double spectral_lower_bound(const Graph& g, const LanczosOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n < 2 || !g.is_connected()) {
    throw InvalidArgument("spectral bound needs a connected graph with at least 2 vertices");
  }
  const std::size_t dim = n - 1;
  const std::size_t cap = options.max_iterations == 0 ? dim : std::min(options.max_iterations, dim);
  const auto size = static_cast<Eigen::Index>(n);

  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    for (Vertex v = 0; v < n; ++v) {
      double acc = static_cast<double>(g.degree(v)) * x[v];
      for (const auto& inc : g.neighbors(v)) acc -= x[inc.neighbor];
      y[v] = acc;
    }
  };
  auto deflate = [](Eigen::VectorXd& x) { x.array() -= x.mean(); };

  Eigen::MatrixXd basis(size, static_cast<Eigen::Index>(cap + 1));
  Eigen::VectorXd q(size);
  Rng rng(Seed(options.start_seed));
  for (Eigen::Index i = 0; i < size; ++i) q[i] = rng.uniform01() - 0.5;
  deflate(q);
  q.normalize();

  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXd w(size);
  double estimate = 0.0;
  for (std::size_t j = 0; j < cap; ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    basis.col(col) = q;
    apply(q, w);
    alpha.push_back(q.dot(w));
    // Full reorthogonalization, twice, plus deflation of the null vector.
    for (int pass = 0; pass < 2; ++pass) {
      const auto active = basis.leftCols(col + 1);
      w -= active * (active.transpose() * w);
      deflate(w);
    }
    const double b = w.norm();
    const bool exhausted = j + 1 == dim || b <= 1e-12 * std::max(1.0, std::abs(alpha.back()));
    // The tridiagonal eigenproblem is O(j^2); only solve it periodically.
    if (exhausted || (j + 1) % 8 == 0 || j + 1 == cap) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      const Eigen::VectorXd diag =
          Eigen::Map<Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(alpha.size()));
      const Eigen::VectorXd sub = Eigen::Map<Eigen::VectorXd>(beta.data(), static_cast<Eigen::Index>(beta.size()));
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      estimate = tri.eigenvalues()[0];
      const double residual = b * std::abs(tri.eigenvectors()(col, 0));
      if (exhausted || residual <= options.relative_tolerance * std::max(std::abs(estimate), 1e-300)) {
        return estimate;
      }
    }
    beta.push_back(b);
    q = w / b;
  }
  throw ConvergenceError("spectral_lower_bound: Lanczos did not converge in " + std::to_string(cap) +
                         " iterations (last estimate " + std::to_string(estimate) + ")");
}

double spectral_lower_bound(const Splicer& splicer, const LanczosOptions& options) {
  return spectral_lower_bound(splicer.support, options);
}

std::vector<std::pair<CutFamily, std::vector<Vertex>>> sample_cuts(const Graph& g, std::size_t samples, Seed seed) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw InvalidArgument("cut sampling needs at least 2 vertices");
  std::vector<std::pair<CutFamily, std::vector<Vertex>>> cuts;
  cuts.reserve(samples);

  // (b) singletons of minimum-degree vertices
  const std::size_t min_deg = g.min_degree();
  for (Vertex v = 0; v < n && cuts.size() < samples / 4; ++v) {
    if (g.degree(v) == min_deg) cuts.push_back({CutFamily::kMinDegreeSingleton, {v}});
  }

  std::vector<std::size_t> size_classes;
  for (std::size_t s = 1; s <= n / 2; s *= 2) size_classes.push_back(s);
  if (size_classes.back() != n / 2) size_classes.push_back(n / 2);

  Rng subset_rng(seed.stream("cut_analysis.sampled_cuts.subset"));
  Rng tree_rng(seed.stream("cut_analysis.sampled_cuts.tree_edge"));
  Rng ball_rng(seed.stream("cut_analysis.sampled_cuts.ball"));
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});

  constexpr std::size_t kCutsPerTree = 8;
  SpanningTree tree;
  std::vector<std::vector<Vertex>> children;
  std::size_t tree_cuts = 0;
  std::size_t trees_drawn = 0;
  std::size_t subset_cuts = 0;

  const std::size_t rest = samples - cuts.size();
  for (std::size_t i = 0; i < rest; ++i) {
    switch (i % 3) {
      case 0: {  // (a) uniform subset of a size class
        const std::size_t s = size_classes[subset_cuts++ % size_classes.size()];
        for (std::size_t j = 0; j < s; ++j) {
          std::swap(pool[j], pool[j + subset_rng.uniform_below(n - j)]);
        }
        cuts.push_back({CutFamily::kRandomSubset, std::vector<Vertex>(pool.begin(), pool.begin() + s)});
        break;
      }
      case 1: {  // (c) subtree below a random edge of a fresh random tree
        if (tree_cuts % kCutsPerTree == 0) {
          WalkOptions options;
          options.record_visits = false;
          tree = aldous_broder(g, seed.stream("cut_analysis.sampled_cuts.tree", trees_drawn++), options).tree;
          children.assign(n, {});
          for (Vertex v = 0; v < n; ++v) {
            if (v != tree.root) children[tree.parent[v]].push_back(v);
          }
        }
        ++tree_cuts;
        Vertex child = static_cast<Vertex>(tree_rng.uniform_below(n - 1));
        if (child >= tree.root) ++child;
        std::vector<Vertex> side{child};
        for (std::size_t head = 0; head < side.size(); ++head) {
          for (const Vertex c : children[side[head]]) side.push_back(c);
        }
        cuts.push_back({CutFamily::kTreeInduced, std::move(side)});
        break;
      }
      default: {  // (d) BFS ball, shrunk until it is a proper subset
        const auto center = static_cast<Vertex>(ball_rng.uniform_below(n));
        const std::size_t radius = 1 + ball_rng.uniform_below(3);
        const auto dist = bfs_distances(g, center);
        std::vector<Vertex> ball;
        for (std::size_t r = radius + 1; r-- > 0;) {
          ball.clear();
          for (Vertex v = 0; v < n; ++v) {
            if (dist[v] >= 0 && static_cast<std::size_t>(dist[v]) <= r) ball.push_back(v);
          }
          if (ball.size() < n) break;
        }
        cuts.push_back({CutFamily::kBfsBall, std::move(ball)});
        break;
      }
    }
  }
  for (auto& [family, a] : cuts) std::sort(a.begin(), a.end());
  return cuts;
}

namespace {

std::vector<CutRatioSample> measure_cuts(const Graph& g, std::size_t derived_n, std::size_t samples, Seed seed,
                                         const std::function<double(const VertexSubset&)>& derived_cut) {
  if (derived_n != g.num_vertices()) throw InvalidArgument("derived graph has a different vertex set");
  std::vector<CutRatioSample> out;
  for (auto& [family, a] : sample_cuts(g, samples, seed)) {
    const VertexSubset subset(g.num_vertices(), a);
    CutRatioSample sample;
    sample.family = family;
    sample.base_cut = cut_size(g, subset);
    sample.derived_cut = derived_cut(subset);
    sample.ratio = sample.base_cut == 0 ? 0.0 : sample.derived_cut / static_cast<double>(sample.base_cut);
    sample.a = std::move(a);
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace

std::vector<CutRatioSample> sampled_cut_ratios(const Graph& g, const Splicer& derived, std::size_t samples,
                                               Seed seed) {
  return measure_cuts(g, derived.n, samples, seed, [&](const VertexSubset& a) {
    return static_cast<double>(cut_size(derived.support, a));
  });
}

std::vector<CutRatioSample> sampled_cut_ratios(const Graph& g, const WeightedGraph& derived, std::size_t samples,
                                               Seed seed) {
  return measure_cuts(g, derived.graph.num_vertices(), samples, seed,
                      [&](const VertexSubset& a) { return derived.cut_weight(a); });
}

std::vector<CutRatioSample> sampled_cut_ratios(const Graph& g, const Graph& derived, std::size_t samples,
                                               Seed seed) {
  return measure_cuts(g, derived.num_vertices(), samples, seed,
                      [&](const VertexSubset& a) { return static_cast<double>(cut_size(derived, a)); });
}

SparsifierQuality sparsifier_quality(const Graph& h, const WeightedGraph& hp, std::size_t samples, Seed seed) {
  const double log_n = std::log(static_cast<double>(h.num_vertices()));
  SparsifierQuality q;
  bool first = true;
  for (const auto& s : sampled_cut_ratios(h, hp, samples, seed)) {
    const double high = s.ratio / log_n;
    q.c_low = first ? s.ratio : std::min(q.c_low, s.ratio);
    q.c_high = first ? high : std::max(q.c_high, high);
    first = false;
    ++q.cuts;
  }
  return q;
}

}  // namespace splicers
