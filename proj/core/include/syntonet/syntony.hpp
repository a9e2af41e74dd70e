#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "syntonet/graph.hpp"
#include "syntonet/scale.hpp"
#include "syntonet/spectrum.hpp"

namespace syntonet {

inline constexpr double kDefaultDeltaMin = 10.0;
inline constexpr double kDefaultDeltaMax = 80.0;
inline constexpr double kDefaultMeanDegree = 10.37;

enum class SyntonyKind { Consonance, Dissonance };

std::string_view to_string(SyntonyKind kind);

/// Partial pairs closer than delta_min/2 Hz are consonant; pairs in
/// [delta_min/2, delta_max/2) are dissonant.
struct SyntonyWindows {
  double delta_min = kDefaultDeltaMin;
  double delta_max = kDefaultDeltaMax;
};

void validate(const SyntonyWindows& w);

struct PairSyntony {
  double consonance = 0.0;
  double dissonance = 0.0;
};

/// Consonance and dissonance of two spectra from a single sweep over partial
/// pairs. Each qualifying pair contributes A(x)A(y) once; the terms of each
/// sum are added in ascending order, so the result is independent of argument
/// order.
PairSyntony pair_syntony(const PartialSpectrum& x, const PartialSpectrum& y, const SyntonyWindows& w);

double pair_consonance(const PartialSpectrum& x, const PartialSpectrum& y, const SyntonyWindows& w);
double pair_dissonance(const PartialSpectrum& x, const PartialSpectrum& y, const SyntonyWindows& w);

/// Symmetric n x n weight matrix with a zero diagonal, row-major.
class SyntonyMatrix {
 public:
  SyntonyMatrix(SyntonyKind kind, std::size_t n, std::vector<std::string> labels = {});

  SyntonyKind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  /// Sets both (i, j) and (j, i); i != j.
  void set(std::size_t i, std::size_t j, double value);
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t nonzero_pairs() const;

 private:
  SyntonyKind kind_;
  std::size_t n_;
  std::vector<double> w_;
  std::vector<std::string> labels_;
};

std::vector<PartialSpectrum> build_spectra(const Scale& scale, const AnharmonicityLaw& law,
                                           double cutoff = kAudibleCutoffHz);

SyntonyMatrix build_syntony_matrix(const Scale& scale, const AnharmonicityLaw& law, const SyntonyWindows& windows,
                                   SyntonyKind kind, double cutoff = kAudibleCutoffHz);

struct SyntonyMatrices {
  SyntonyMatrix consonance;
  SyntonyMatrix dissonance;
};

/// Both matrices from one pass over the note pairs.
SyntonyMatrices build_syntony_matrices(const Scale& scale, const AnharmonicityLaw& law,
                                       const SyntonyWindows& windows, double cutoff = kAudibleCutoffHz);

/// round(mean_degree * n / 2).
std::size_t target_edge_count(double mean_degree, std::size_t n);

/// Unweighted graph on the `target_edges` heaviest nonzero pairs. Ties in
/// weight are broken by ascending (i, j).
Graph threshold_graph(const SyntonyMatrix& m, std::size_t target_edges);

struct ComponentGraph {
  Graph graph;
  std::vector<NodeId> original_ids;  // original_ids[new id] = id in the source graph
};

/// Node-induced subgraph on the largest connected component. Among equally
/// large components the one holding the smallest node id wins.
ComponentGraph largest_component(const Graph& g);

}  // namespace syntonet
