#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "syntonet/graph.hpp"

namespace syntonet {

enum class ModelKind { ER, WS, BA, GEO, SBM };

std::string_view to_string(ModelKind kind);

struct ErParams {
  double p = 0.0;
};

/// Toroidal rows x cols lattice; each node links to its `lattice_degree`
/// nearest lattice neighbours (Euclidean order), then every edge is rewired
/// with probability `rewire_p`.
struct WsParams {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t lattice_degree = 4;
  double rewire_p = 0.0;
};

/// Preferential attachment of `attachments` edges per node, grown from a
/// complete graph on `seed_clique` nodes.
struct BaParams {
  std::size_t attachments = 1;
  std::size_t seed_clique = 2;
};

/// One node per cell of a rows x cols unit grid, jittered uniformly inside
/// its cell; nodes within `radius` are linked.
struct GeoParams {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double radius = 0.0;
};

struct SbmParams {
  std::vector<std::size_t> block_sizes;
  double p_in = 0.0;
  double p_out = 0.0;
};

using ModelParams = std::variant<ErParams, WsParams, BaParams, GeoParams, SbmParams>;

struct ModelSpec {
  std::size_t n = 0;
  double target_mean_degree = 0.0;
  std::uint64_t seed = 0;
  ModelParams params;

  ModelKind kind() const { return static_cast<ModelKind>(params.index()); }
};

void validate(const ModelSpec& spec);

// Simple undirected graph from the model's ensemble; deterministic in the seed.
Graph generate(const ModelSpec& spec);

/// Parameters for `kind` chosen so the expected (or empirical, for GEO) mean
/// degree matches `target_mean_degree`. `ws_rewire_p` only applies to WS.
ModelSpec fit_to_degree(ModelKind kind, std::size_t n, double target_mean_degree, std::uint64_t seed,
                        double ws_rewire_p = 0.01);

/// Near-square factorisation rows * cols == n with rows <= cols.
std::pair<std::size_t, std::size_t> lattice_shape(std::size_t n);

/// Lattice offsets (drow, dcol), one per undirected neighbour pair, in order of
/// increasing Euclidean length.
std::vector<std::pair<int, int>> lattice_offsets(std::size_t lattice_degree);

/// A named ensemble used as an anchor in the projection (WS appears twice,
/// at two rewiring probabilities).
struct ModelClass {
  std::string label;
  ModelKind kind;
  double ws_rewire_p = 0.0;
};

std::vector<ModelClass> default_model_classes();

/// Per-sample seed from (master seed, model label, sample index); adding a
/// model class never changes the seeds of the others.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label, std::uint64_t index);

/// Stateless 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace syntonet
