#ifndef SPLICERS_CUT_ANALYSIS_HPP
#define SPLICERS_CUT_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "splicers/graph.hpp"
#include "splicers/rng.hpp"
#include "splicers/splicer.hpp"

namespace splicers {

enum class ExpansionKind { kEdge, kVertex };
enum class ExpansionMethod { kExact, kSpectralBound, kSampled };

std::string_view to_string(ExpansionKind kind);
std::string_view to_string(ExpansionMethod method);

struct ExpansionReport {
  ExpansionKind kind = ExpansionKind::kEdge;
  ExpansionMethod method = ExpansionMethod::kExact;
  double value = 0.0;
  /// For exact reports value == numerator / denominator with
  /// denominator == |witness|.
  std::size_t numerator = 0;
  std::size_t denominator = 1;
  std::vector<Vertex> witness;  ///< sorted, 1 <= size <= n/2
};

/// Exhaustive scans are limited to this many vertices.
inline constexpr std::size_t kExactExpansionLimit = 24;

/// min over 1 <= |A| <= n/2 of |δ(A)|/|A|, by scanning every subset that
/// contains vertex 0 and using whichever side has at most n/2 vertices.
/// Throws InvalidArgument for n > kExactExpansionLimit or n < 2.
ExpansionReport edge_expansion_exact(const Graph& g);

/// As edge_expansion_exact with |Γ'(A)|/|A|.
ExpansionReport vertex_expansion_exact(const Graph& g);

/// The ratios for one specific set, for witness replay.
double edge_expansion_of(const Graph& g, const VertexSubset& a);
double vertex_expansion_of(const Graph& g, const VertexSubset& a);

struct LanczosOptions {
  double relative_tolerance = 1e-8;
  /// 0 means the dimension of the deflated space (n-1), where the Krylov
  /// space is exhausted and the answer is exact up to rounding.
  std::size_t max_iterations = 0;
  std::uint64_t start_seed = 0x5eed;
};

/// λ_2 of the combinatorial Laplacian by Lanczos with full
/// reorthogonalization, deflated against the all-ones vector. Edge
/// expansion is at least λ_2 / 2. Throws InvalidArgument if g is
/// disconnected and ConvergenceError at the iteration cap.
double spectral_lower_bound(const Graph& g, const LanczosOptions& options = {});
double spectral_lower_bound(const Splicer& splicer, const LanczosOptions& options = {});

enum class CutFamily { kRandomSubset, kMinDegreeSingleton, kTreeInduced, kBfsBall };
std::string_view to_string(CutFamily family);

struct CutRatioSample {
  CutFamily family;
  std::vector<Vertex> a;  ///< sorted
  std::size_t base_cut = 0;
  double derived_cut = 0.0;
  double ratio = 0.0;
};

/// Cuts from four families (random subsets of sizes 1, 2, 4, ..., n/2;
/// singletons of minimum-degree vertices; one-edge deletions from fresh
/// random spanning trees of g; BFS balls of radius 1..3), compared between
/// g and the derived graph. Singletons take at most a quarter of the budget;
/// the other families alternate.
std::vector<CutRatioSample> sampled_cut_ratios(const Graph& g, const Splicer& derived, std::size_t samples,
                                               Seed seed);
std::vector<CutRatioSample> sampled_cut_ratios(const Graph& g, const WeightedGraph& derived, std::size_t samples,
                                               Seed seed);
/// Identity comparison: derived cut counted in g itself.
std::vector<CutRatioSample> sampled_cut_ratios(const Graph& g, const Graph& derived, std::size_t samples,
                                               Seed seed);

/// The vertex sets sampled_cut_ratios uses, without measuring them.
std::vector<std::pair<CutFamily, std::vector<Vertex>>> sample_cuts(const Graph& g, std::size_t samples, Seed seed);

struct SparsifierQuality {
  double c_low = 0.0;   ///< min w(δ_{H'}(A)) / |δ_H(A)|
  double c_high = 0.0;  ///< max w(δ_{H'}(A)) / (|δ_H(A)| ln n)
  std::size_t cuts = 0;
};

SparsifierQuality sparsifier_quality(const Graph& h, const WeightedGraph& hp, std::size_t samples, Seed seed);

}  // namespace splicers

#endif  // SPLICERS_CUT_ANALYSIS_HPP
