#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "syntonet/graph.hpp"
#include "syntonet/metrics.hpp"
#include "syntonet/projection.hpp"
#include "syntonet/scale.hpp"
#include "syntonet/spectrum.hpp"
#include "syntonet/syntony.hpp"

namespace syntonet {

/// One analysed graph: a reference-model sample or a syntonet.
struct GraphRecord {
  std::string source;  // "model" or "syntonet"
  std::string group;   // model label (ER, WS1, ...) or temperament name
  std::string kind;    // consonance / dissonance for syntonets, empty for models
  std::optional<double> beta;
  std::uint64_t seed = 0;
  std::size_t sample = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  FeatureVector features;
  Point2 point{0.0, 0.0};
};

/// Shortest decimal text that reads back to the same double.
std::string format_number(double x);

void write_temperaments_csv(std::ostream& os, double base_frequency);

void write_spectrum_csv_header(std::ostream& os);
void write_spectrum_csv_rows(std::ostream& os, const std::string& label, const PartialSpectrum& s);

void write_matrix_csv(std::ostream& os, const SyntonyMatrix& m);

/// Tab-separated "i j weight" lines after a "# nodes=<n>" comment.
void write_edge_list(std::ostream& os, const Graph& g);
/// Reads the format above; the node count comes from the comment or, if
/// absent, from the largest endpoint.
Graph read_edge_list(std::istream& is);

void write_graphml(std::ostream& os, const Graph& g);

/// Columns: source, group, kind, beta, seed, sample, nodes, edges, 34 features.
void write_features_csv(std::ostream& os, const std::vector<GraphRecord>& records);
std::vector<GraphRecord> read_features_csv(std::istream& is);

/// Rows mean, std, pc1..pcK over all input features (dropped ones carry 0 in
/// component rows) with eigenvalue and explained-ratio columns.
void write_pca_csv(std::ostream& os, const PcaModel& m, const std::vector<std::string>& feature_names);

/// Columns: source, group, kind, beta, seed, sample, pc1, pc2.
void write_projection_csv(std::ostream& os, const std::vector<GraphRecord>& records);
std::vector<GraphRecord> read_projection_csv(std::istream& is);

/// One generated model sample, before component extraction.
struct BatchEntry {
  std::string model;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

/// Columns: model, sample, seed, n, edges.
void write_batch_manifest_csv(std::ostream& os, const std::vector<BatchEntry>& entries);

std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::filesystem::path& path);
/// Writes bytes, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& bytes);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace syntonet
