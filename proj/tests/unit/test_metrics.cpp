#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "syntonet/errors.hpp"
#include "syntonet/graphmodels.hpp"
#include "syntonet/metrics.hpp"
#include "syntonet/syntony.hpp"

using namespace syntonet;
using namespace syntonet::testkit;

namespace {

void expect_all_near(const std::vector<double>& got, const std::vector<double>& want, double tol,
                     const std::string& what) {
  ASSERT_EQ(got.size(), want.size()) << what;
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << what << " at " << i;
}

void expect_all_eq(const std::vector<double>& v, double x) {
  for (double y : v) EXPECT_EQ(y, x);
}

// 0 - {1, 2}; 1 - {3, 4}; 2 - {5}
Graph uneven_tree() { return Graph::unweighted(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}}); }

}  // namespace

TEST(Metrics, DegreeAndClustering) {
  expect_all_eq(clustering(complete_graph(5)), 1.0);
  expect_all_eq(clustering(star_graph(5)), 0.0);
  expect_all_eq(clustering(cycle_graph(6)), 0.0);
  expect_all_eq(degree(cycle_graph(6)), 2.0);
  const auto g = Graph::unweighted(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  EXPECT_DOUBLE_EQ(clustering(g)[0], 1.0 / 3.0);
  EXPECT_EQ(clustering(g)[3], 0.0);
}

TEST(Metrics, HierarchicalDegreeClosedForms) {
  EXPECT_EQ(hierarchical_degree(path_graph(4), 2)[0], 1.0);
  expect_all_eq(hierarchical_degree(complete_graph(5), 2), 0.0);
  expect_all_eq(hierarchical_degree(cycle_graph(8), 3), 2.0);
  EXPECT_EQ(hierarchical_degree(star_graph(6), 2)[1], 4.0);
}

TEST(Metrics, AccessibilityClosedForms) {
  for (std::size_t n : {3u, 5u, 9u}) {
    const double m = static_cast<double>(n) - 1.0;
    for (double a : accessibility(complete_graph(n), 1)) EXPECT_NEAR(a, m, 1e-12);
    // two steps: back home with 1/m, elsewhere (m - 1)/m^2 each
    const double p_self = 1.0 / m, p_other = (m - 1.0) / (m * m);
    const double want = std::exp(-p_self * std::log(p_self) - m * p_other * std::log(p_other));
    for (double a : accessibility(complete_graph(n), 2)) EXPECT_NEAR(a, want, 1e-12);
  }
  EXPECT_NEAR(accessibility(star_graph(7), 2)[0], 1.0, 1e-15);
  for (double a : accessibility(cycle_graph(10), 3)) EXPECT_NEAR(a, std::exp(-2 * (0.125 * std::log(0.125)) - 2 * (0.375 * std::log(0.375))), 1e-12);
}

TEST(Metrics, GeneralizedAccessibility) {
  const auto g = path_graph(3);
  const auto got = generalized_accessibility(g);
  expect_all_near(got, oracle_generalized_accessibility(g), 1e-10, "P3");
  EXPECT_NEAR(got[0], got[2], 1e-14);
  EXPECT_GT(std::fabs(got[0] - got[1]), 1e-3);
  const auto k = generalized_accessibility(complete_graph(6));
  for (double x : k) EXPECT_NEAR(x, k[0], 1e-12);
  const auto e = generalized_accessibility(path_graph(2));
  EXPECT_NEAR(e[0], e[1], 1e-14);
}

TEST(Metrics, SymmetryClosedForms) {
  EXPECT_EQ(concentric_symmetry(star_graph(6), 2, SymmetryVariant::Backbone)[0], 1.0);
  EXPECT_EQ(concentric_symmetry(star_graph(6), 2, SymmetryVariant::Merged)[0], 1.0);
  EXPECT_NEAR(concentric_symmetry(complete_binary_tree(3), 2, SymmetryVariant::Backbone)[0], 1.0, 1e-12);
  EXPECT_NEAR(concentric_symmetry(complete_binary_tree(3), 3, SymmetryVariant::Merged)[0], 1.0, 1e-12);
  for (double s : concentric_symmetry(cycle_graph(6), 2, SymmetryVariant::Backbone)) EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(Metrics, SymmetryUnevenArrival) {
  // ring 2 of node 0 is {3, 4, 5} reached with 1/4, 1/4, 1/2
  const double uneven = std::pow(2.0, 1.5) / 3.0;
  EXPECT_NEAR(concentric_symmetry(uneven_tree(), 2, SymmetryVariant::Backbone)[0], uneven, 1e-12);
  EXPECT_NEAR(concentric_symmetry(uneven_tree(), 2, SymmetryVariant::Merged)[0], uneven, 1e-12);

  // an edge inside ring 2 joins 3 and 4 into one merged vertex
  const auto ring2 = Graph::unweighted(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 4}});
  EXPECT_NEAR(concentric_symmetry(ring2, 2, SymmetryVariant::Backbone)[0], uneven, 1e-12);
  EXPECT_NEAR(concentric_symmetry(ring2, 2, SymmetryVariant::Merged)[0], 1.0, 1e-12);

  // an edge inside ring 1 merges 1 and 2, after which ring 2 is reached uniformly
  const auto ring1 = Graph::unweighted(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {1, 2}});
  EXPECT_NEAR(concentric_symmetry(ring1, 2, SymmetryVariant::Backbone)[0], uneven, 1e-12);
  EXPECT_NEAR(concentric_symmetry(ring1, 2, SymmetryVariant::Merged)[0], 1.0, 1e-12);
}

TEST(Metrics, SymmetryLevelsAgreeWithSingleLevel) {
  Rng rng(3);
  const auto g = random_connected_graph(rng, 30, 0.1);
  for (auto variant : {SymmetryVariant::Backbone, SymmetryVariant::Merged}) {
    const auto levels = concentric_symmetry_levels(g, 4, variant);
    for (int h = 1; h <= 4; ++h) EXPECT_EQ(levels[h - 1], concentric_symmetry(g, h, variant));
  }
}

TEST(Metrics, CentralityClosedForms) {
  const auto s = betweenness(star_graph(5));
  EXPECT_DOUBLE_EQ(s[0], 1.0);
  for (std::size_t v = 1; v < 5; ++v) EXPECT_EQ(s[v], 0.0);
  EXPECT_EQ(eccentricity(path_graph(4)), (std::vector<double>{3, 2, 2, 3}));
  for (double x : eigenvector_centrality(cycle_graph(7))) EXPECT_NEAR(x, 1.0 / std::sqrt(7.0), 1e-9);
  for (double x : eigenvector_centrality(cycle_graph(8))) EXPECT_NEAR(x, 1.0 / std::sqrt(8.0), 1e-9);
  const auto eb = edge_betweenness(path_graph(3));  // each edge carries 2 of 3 pairs
  for (double x : eb) EXPECT_DOUBLE_EQ(x, 2.0 / 3.0);
}

TEST(Metrics, MatchExhaustiveOraclesOnSmallGraphs) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const auto g = random_connected_graph(rng, n, std::uniform_real_distribution<double>(0.0, 0.6)(rng));
    expect_all_near(betweenness(g), oracle_betweenness(g), 1e-9, "betweenness");
    expect_all_near(edge_betweenness(g), oracle_edge_betweenness(g), 1e-9, "edge betweenness");
    expect_all_near(eccentricity(g), oracle_eccentricity(g), 1e-9, "eccentricity");
    for (int h : {2, 3}) {
      expect_all_near(hierarchical_degree(g, h), oracle_hierarchical_degree(g, h), 1e-9, "hierarchical degree");
      expect_all_near(accessibility(g, h), oracle_accessibility(g, h), 1e-9, "accessibility");
    }
    expect_all_near(generalized_accessibility(g), oracle_generalized_accessibility(g), 1e-9, "generalized");
  }
}

TEST(Metrics, BoundsOnRandomGraphs) {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(5, 40)(rng);
    const auto g = random_connected_graph(rng, n, 0.15);
    const auto m = measure(g);
    for (double c : clustering(g)) EXPECT_TRUE(c >= 0.0 && c <= 1.0);
    for (int h : {2, 3})
      for (double a : accessibility(g, h)) EXPECT_TRUE(a >= 1.0 - 1e-12 && a <= n + 1e-9);
    for (auto variant : {SymmetryVariant::Backbone, SymmetryVariant::Merged})
      for (int h : {2, 3, 4})
        for (double s : concentric_symmetry(g, h, variant)) EXPECT_TRUE(s > 0.0 && s <= 1.0 + 1e-12);
    const auto ev = eigenvector_centrality(g);
    double norm = 0.0;
    for (double x : ev) {
      EXPECT_GT(x, 0.0);
      norm += x * x;
    }
    EXPECT_NEAR(norm, 1.0, 1e-9);
    for (std::size_t k = 0; k < kMeasurementCount; ++k) {
      const auto expected = std::string(measurement_names()[k]) == "edge_betweenness" ? g.edge_count() : n;
      EXPECT_EQ(m.values[k].size(), expected) << measurement_names()[k];
    }
  }
}

TEST(Features, NamesAndOrder) {
  const auto names = feature_names();
  ASSERT_EQ(names.size(), kFeatureCount);
  EXPECT_EQ(names[0], "degree_mean");
  EXPECT_EQ(names[1], "degree_std");
  EXPECT_EQ(names[33], "eccentricity_std");
}

TEST(Features, CompleteGraph) {
  const auto f = feature_vector(complete_graph(6));
  EXPECT_EQ(f.values[0], 5.0);
  EXPECT_EQ(f.values[1], 0.0);
  EXPECT_EQ(f.values[2], 1.0);
  EXPECT_EQ(f.values[3], 0.0);
}

TEST(Features, VertexTransitiveGraphsHaveZeroSpread) {
  for (const auto& g : {cycle_graph(9), complete_graph(7)}) {
    const auto f = feature_vector(g);
    for (std::size_t k = 1; k < kFeatureCount; k += 2) EXPECT_NEAR(f.values[k], 0.0, 1e-12) << feature_names()[k];
  }
}

TEST(Features, RelabelInvariance) {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_connected_graph(rng, 40, 0.12);
    const auto a = feature_vector(g);
    const auto b = feature_vector(relabel(g, random_permutation(rng, 40)));
    for (std::size_t k = 0; k < kFeatureCount; ++k)
      EXPECT_NEAR(a.values[k], b.values[k], 1e-9 * std::max(1.0, std::fabs(a.values[k]))) << feature_names()[k];
  }
}

TEST(Features, PopulationStd) {
  const auto ms = mean_std({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(ms.mean, 2.5);
  EXPECT_DOUBLE_EQ(ms.std, std::sqrt(1.25));
  EXPECT_EQ(mean_std({3.0, 1.0, 2.0}).mean, mean_std({1.0, 2.0, 3.0}).mean);
}

TEST(Metrics, ErSampleMatchesPathCountingOracle) {
  auto spec = fit_to_degree(ModelKind::ER, 60, 6.0, 1);
  spec.seed = 8;
  const auto g = largest_component(generate(spec)).graph;
  const auto n = g.node_count();
  const auto d = floyd_warshall(g);

  // sigma[s][t]: number of shortest s-t paths, filled in order of distance
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  const auto ecc = oracle_eccentricity(g);
  const int diameter = static_cast<int>(*std::max_element(ecc.begin(), ecc.end()));
  for (NodeId s = 0; s < n; ++s) {
    sigma[s][s] = 1.0;
    for (int r = 1; r <= diameter; ++r)
      for (NodeId t = 0; t < n; ++t)
        if (d[s][t] == r)
          for (NodeId u : g.neighbors(t))
            if (d[s][u] == r - 1) sigma[s][t] += sigma[s][u];
  }
  std::vector<double> bc(n, 0.0);
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = s + 1; t < n; ++t)
      for (NodeId v = 0; v < n; ++v)
        if (v != s && v != t && d[s][v] + d[v][t] == d[s][t]) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
  for (double& x : bc) x /= (n - 1.0) * (n - 2.0) / 2.0;

  expect_all_near(betweenness(g), bc, 1e-9, "betweenness");
  expect_all_near(eccentricity(g), oracle_eccentricity(g), 0.0, "eccentricity");
  for (int h : {2, 3}) {
    expect_all_near(hierarchical_degree(g, h), oracle_hierarchical_degree(g, h), 0.0, "hierarchical degree");
    expect_all_near(accessibility(g, h), oracle_accessibility(g, h), 1e-9, "accessibility");
  }
  expect_all_near(generalized_accessibility(g), oracle_generalized_accessibility(g), 1e-9, "generalized");
}

TEST(Metrics, Errors) {
  const auto disconnected = Graph::unweighted(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(degree(disconnected), DomainError);
  EXPECT_THROW(betweenness(disconnected), DomainError);
  EXPECT_THROW(feature_vector(path_graph(4)), DomainError);
  EXPECT_THROW(feature_vector(Graph(5, {{0, 1, 2.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}}, true)), DomainError);
  EXPECT_THROW(accessibility(path_graph(5), 0), DomainError);
}
