#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "syntonet/graph.hpp"
#include "syntonet/spectrum.hpp"

namespace syntonet::testkit {

using Rng = std::mt19937_64;

/// Random spanning tree plus each remaining pair with probability p_extra.
Graph random_connected_graph(Rng& rng, std::size_t n, double p_extra);

/// Between 1 and max_partials partials in [lo, hi) Hz with amplitudes in (0, 1],
/// sorted by frequency. A share of frequencies sit on a coarse grid so that
/// exact ties and window-boundary distances occur.
PartialSpectrum random_spectrum(Rng& rng, std::size_t max_partials, double lo = 50.0, double hi = 400.0);

Graph relabel(const Graph& g, const std::vector<NodeId>& perm);  // node v becomes perm[v]
std::vector<NodeId> random_permutation(Rng& rng, std::size_t n);

Graph star_graph(std::size_t n);  // node 0 is the centre, n - 1 leaves
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_binary_tree(int depth);  // root 0, children of v are 2v+1, 2v+2

}  // namespace syntonet::testkit
