#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "syntonet/graph.hpp"

namespace syntonet {

// All measurements expect a connected, unweighted, undirected graph and throw
// DomainError otherwise.

std::vector<double> degree(const Graph& g);

/// 2 T_i / (k_i (k_i - 1)); 0 when k_i < 2.
std::vector<double> clustering(const Graph& g);

/// Number of nodes at shortest-path distance exactly h.
std::vector<double> hierarchical_degree(const Graph& g, int h);

/// exp of the entropy of row i of P^h, P = D^-1 A (ordinary random walks).
std::vector<double> accessibility(const Graph& g, int h);

/// exp of the entropy of row i of e^-1 * exp(P). The series stops once the
/// largest entry of the next term drops below 1e-12.
std::vector<double> generalized_accessibility(const Graph& g);

enum class SymmetryVariant { Backbone, Merged };

/// Concentric symmetry at level h.
///
/// Around each node the graph is split into rings by hop distance. A walker
/// starts at the node and at every step moves to a uniformly chosen neighbour
/// in the next ring out; walkers with no outward neighbour are dropped. The
/// value is exp(H) / |support| of the ring-h arrival distribution, so it lies
/// in (0, 1] and equals 1 for uniform arrival. Backbone ignores intra-ring
/// edges; Merged first contracts every connected group of intra-ring edges
/// into a single vertex. Nodes with nothing reachable in ring h score 1.
std::vector<double> concentric_symmetry(const Graph& g, int h, SymmetryVariant variant);

/// Levels 1..max_h at once; result[h - 1][node].
std::vector<std::vector<double>> concentric_symmetry_levels(const Graph& g, int max_h, SymmetryVariant variant);

/// Principal eigenvector of A, L2-normalised and positive. Power iteration on
/// A + I (same eigenvectors, but no oscillation on bipartite graphs) to a
/// max-norm step below 1e-10; NumericError after 1e5 iterations.
std::vector<double> eigenvector_centrality(const Graph& g);

/// Shortest-path betweenness over unordered pairs, divided by (n-1)(n-2)/2.
std::vector<double> betweenness(const Graph& g);

/// Edge betweenness over unordered pairs, divided by n(n-1)/2. Indexed like g.edges().
std::vector<double> edge_betweenness(const Graph& g);

std::vector<double> eccentricity(const Graph& g);

inline constexpr std::size_t kMeasurementCount = 17;
inline constexpr std::size_t kFeatureCount = 2 * kMeasurementCount;

/// Measurement names in feature order.
const std::array<std::string_view, kMeasurementCount>& measurement_names();

/// "<measurement>_mean", "<measurement>_std" pairs in feature order.
std::vector<std::string> feature_names();

struct MeasurementSet {
  // values[k] holds the per-node (per-edge for edge betweenness) list of measurement k
  std::array<std::vector<double>, kMeasurementCount> values;
};

MeasurementSet measure(const Graph& g);

struct FeatureVector {
  std::array<double, kFeatureCount> values{};
};

struct MeanStd {
  double mean;
  double std;  // population
};

/// Order-independent mean and population standard deviation.
MeanStd mean_std(std::vector<double> values);

/// Requires a connected graph with at least 5 nodes.
FeatureVector feature_vector(const Graph& g);
FeatureVector summarize(const MeasurementSet& m);

}  // namespace syntonet
