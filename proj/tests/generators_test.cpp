#include <gtest/gtest.h>

#include <cmath>

#include "splicers/errors.hpp"
#include "splicers/generators.hpp"

using namespace splicers;

TEST(Generators, NamedGraphs) {
  EXPECT_EQ(complete_graph(5).num_edges(), 10u);
  EXPECT_EQ(cycle_graph(5).num_edges(), 5u);
  EXPECT_EQ(path_graph(5).num_edges(), 4u);
  EXPECT_EQ(star_graph(4).degree(0), 4u);
  EXPECT_EQ(wheel_graph(5).num_edges(), 8u);
  EXPECT_EQ(prism_graph().num_edges(), 9u);
  const Graph p = petersen_graph();
  EXPECT_EQ(p.num_vertices(), 10u);
  EXPECT_EQ(p.num_edges(), 15u);
  EXPECT_EQ(p.min_degree(), 3u);
  EXPECT_EQ(p.max_degree(), 3u);
  EXPECT_TRUE(cycle_with_chord(5).has_edge(0, 2));
  EXPECT_THROW(complete_graph(1), InvalidArgument);
}

TEST(Generators, GnpIsSeededAndHasExpectedDensity) {
  const Graph a = gnp_graph(200, 0.1, Seed(1));
  const Graph b = gnp_graph(200, 0.1, Seed(1));
  EXPECT_EQ(a.num_edges(), b.num_edges());
  const double pairs = 200.0 * 199 / 2;
  EXPECT_NEAR(a.num_edges(), 0.1 * pairs, 4 * std::sqrt(pairs * 0.1 * 0.9));
  EXPECT_EQ(gnp_graph(10, 1.0, Seed(2)).num_edges(), 45u);
  EXPECT_EQ(gnp_graph(10, 0.0, Seed(2)).num_edges(), 0u);
}

TEST(Generators, RandomRegular) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Graph g = random_regular_graph(30, 3, Seed(s));
    EXPECT_EQ(g.min_degree(), 3u);
    EXPECT_EQ(g.max_degree(), 3u);
  }
  EXPECT_THROW(random_regular_graph(5, 3, Seed(1)), InvalidArgument);
}

TEST(Generators, LowerBoundFamilyIsValid) {
  for (const std::size_t ell : {1u, 2u, 3u}) {
    const auto family = lower_bound_family(400, 3, ell, Seed(ell));
    EXPECT_TRUE(validate_lower_bound_family(family).empty());
    EXPECT_FALSE(family.gadgets.empty());
    for (const auto& gadget : family.gadgets) EXPECT_EQ(gadget.path.size(), ell);
  }
  EXPECT_THROW(lower_bound_family(11, 3, 1, Seed(1)), InvalidArgument);
  EXPECT_THROW(lower_bound_family(100, 2, 1, Seed(1)), InvalidArgument);
}

TEST(Generators, DpProbabilitiesMatchArcMarginal) {
  for (const double p : {0.01, 0.1, 0.5, 0.9, 1.0}) {
    const auto pr = dp_probabilities(p);
    const double q = 1.0 - std::sqrt(1.0 - p);
    EXPECT_NEAR(pr.both + pr.forward + pr.backward, 1.0, 1e-12);
    EXPECT_NEAR(pr.forward, pr.backward, 1e-15);
    // Unconditionally each arc is present with probability q, and the two
    // arcs independently: Pr[both] = q^2.
    EXPECT_NEAR(p * (pr.both + pr.forward), q, 1e-12);
    EXPECT_NEAR(p * pr.both, q * q, 1e-12);
    EXPECT_NEAR(pr.arc_marginal, q, 1e-12);
  }
  EXPECT_THROW(dp_probabilities(0.0), InvalidArgument);
}

TEST(Generators, DirectedOrientationFrequencies) {
  const Graph k = complete_graph(60);
  const double p = 0.3;
  const auto pr = dp_probabilities(p);
  const auto d = direct_edges_dp(k, p, Seed(9));
  const double m = static_cast<double>(k.num_edges());
  // Each edge gives 2 arcs with probability `both`, otherwise 1.
  const double expected_arcs = m * (1.0 + pr.both);
  const double var = m * pr.both * (1.0 - pr.both);
  EXPECT_NEAR(static_cast<double>(d.num_arcs()), expected_arcs, 4 * std::sqrt(var));
}
