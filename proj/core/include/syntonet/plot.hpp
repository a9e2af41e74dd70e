#pragma once

#include <string>
#include <vector>

#include "syntonet/graph.hpp"
#include "syntonet/io.hpp"

namespace syntonet {

struct PlotStyle {
  std::string title;
  std::string x_label = "PC1";
  std::string y_label = "PC2";
  int width = 760;
  int height = 560;
  /// Colour syntonet markers by beta on a ramp instead of by temperament.
  bool color_by_beta = false;
  double beta_min = 0.8;
  double beta_max = 1.2;
};

/// Scatter plot of projected graphs: model samples as circles, syntonets as
/// squares, plus legend (and a beta colour bar when colouring by beta). Every
/// marker carries its data coordinates in data-pc1/data-pc2 attributes. Output
/// is a pure function of the inputs.
std::string emit_plot(const std::vector<GraphRecord>& points, const PlotStyle& style);

/// Fixed spiral layout of a syntonet: angle by pitch class, radius by octave.
/// `original_ids[v]` is the scale index of node v.
std::string emit_network_svg(const Graph& g, const std::vector<NodeId>& original_ids, const std::string& title);

}  // namespace syntonet
