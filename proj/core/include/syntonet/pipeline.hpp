#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "syntonet/graphmodels.hpp"
#include "syntonet/io.hpp"
#include "syntonet/projection.hpp"
#include "syntonet/scale.hpp"
#include "syntonet/spectrum.hpp"
#include "syntonet/syntony.hpp"

namespace syntonet {

inline constexpr std::string_view kToolVersion = "0.3.0";

struct ExperimentConfig {
  std::vector<TemperamentName> temperaments{kAllTemperaments.begin(), kAllTemperaments.end()};
  std::vector<SyntonyKind> kinds{SyntonyKind::Consonance, SyntonyKind::Dissonance};
  double base_frequency = kC1Frequency;
  int octaves = kDefaultOctaves;
  double alpha = kDefaultAlpha;
  double delta_min = kDefaultDeltaMin;
  double delta_max = kDefaultDeltaMax;
  double cutoff = kAudibleCutoffHz;
  double beta_start = 0.80;
  double beta_stop = 1.20;
  double beta_step = 0.002;
  /// Adds a fine sweep over [0.99, 1.01] with step 2e-4.
  bool beta_refine = false;
  /// Betas whose syntonets are also drawn as network pictures.
  std::vector<double> layout_betas{0.80, 1.0, 1.0056, 1.0058, 1.20};
  double target_mean_degree = kDefaultMeanDegree;
  std::size_t model_samples = 100;
  std::uint64_t master_seed = 20190401;

  // execution only; not part of the recorded configuration
  std::filesystem::path output_dir;  // empty: compute without writing files
  std::size_t threads = 0;           // 0: hardware concurrency
  bool overwrite = false;            // replace a previous run in output_dir
  bool record_timing = false;        // wall-clock seconds in the manifest
};

void validate(const ExperimentConfig& cfg);

/// Sweep values start, start + step, ... <= stop (plus the refine grid), each
/// snapped to a 1e-9 grid so that e.g. 1.0 is hit exactly. Sorted, unique.
std::vector<double> beta_grid(const ExperimentConfig& cfg);

struct ManifestEntry {
  std::string path;  // relative to the output directory, '/'-separated
  std::string sha256;
  std::size_t bytes = 0;
};

struct RunManifest {
  std::string command;
  std::string version{kToolVersion};
  std::string config_json;  // canonical snapshot of the recorded configuration
  std::vector<ManifestEntry> files;
  std::optional<double> seconds;
};

struct SkippedJob {
  std::string temperament;
  std::string kind;
  double beta = 1.0;
  std::string reason;
};

struct ModelCorpus {
  std::vector<GraphRecord> records;  // features of each sample's largest component
  std::vector<BatchEntry> batch;     // generated graphs before component extraction
};

/// model_samples draws of every default model class at n = 12 * octaves,
/// fitted to target_mean_degree. Seeds come from derive_seed(master, label, i).
ModelCorpus build_model_corpus(const ExperimentConfig& cfg);

struct SyntonetOutcome {
  SyntonyKind kind;
  GraphRecord record;
  Graph thresholded;          // before component extraction
  ComponentGraph component;   // what the features describe
  std::optional<std::string> skipped;
};

/// Syntonets of one temperament at one beta, one per configured kind.
/// Failures to threshold or a largest component under 5 nodes are reported
/// through `skipped`; features are left empty in that case.
std::vector<SyntonetOutcome> evaluate_syntonets(const ExperimentConfig& cfg, TemperamentName temperament,
                                                double beta);

struct RunResult {
  RunManifest manifest;
  PcaModel pca;
  std::vector<GraphRecord> models;
  std::vector<GraphRecord> syntonets;
  std::vector<SkippedJob> skipped;
};

/// Harmonic partials (beta = 1): every temperament x kind projected onto the
/// PCA plane fitted on the model corpus.
RunResult run_nonshifted(const ExperimentConfig& cfg);

/// Full beta sweep for every temperament x kind.
RunResult run_shifted(const ExperimentConfig& cfg);

/// Problems found when checking `dir` against its manifest.json: missing or
/// unlisted files and checksum mismatches. Empty when consistent.
std::vector<std::string> verify_manifest(const std::filesystem::path& dir);

/// Fixed-precision token used in file names, e.g. 1.0056 -> "1.005600".
std::string beta_tag(double beta);

}  // namespace syntonet
