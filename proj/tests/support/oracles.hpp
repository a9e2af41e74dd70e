#pragma once

#include <array>
#include <vector>

#include "syntonet/graph.hpp"
#include "syntonet/scale.hpp"
#include "syntonet/syntony.hpp"

namespace syntonet::testkit {

/// Published 4-decimal ratio table, rows in kAllTemperaments order.
const std::array<std::array<double, 12>, 5>& printed_ratio_table();

/// Every partial pair compared, qualifying products summed in ascending order.
PairSyntony brute_pair_syntony(const PartialSpectrum& x, const PartialSpectrum& y, const SyntonyWindows& w);

/// All-pairs hop distances by Floyd-Warshall; -1 when unreachable.
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

std::vector<double> oracle_eccentricity(const Graph& g);
std::vector<double> oracle_hierarchical_degree(const Graph& g, int h);

/// Enumerates every walk of length h and accumulates its probability.
std::vector<double> oracle_accessibility(const Graph& g, int h);

/// Enumerates all simple paths between each pair and keeps the shortest ones.
std::vector<double> oracle_betweenness(const Graph& g);
std::vector<double> oracle_edge_betweenness(const Graph& g);  // indexed like g.edges()

/// exp(entropy) of each row of e^-1 * sum_{k<terms} P^k / k!.
std::vector<double> oracle_generalized_accessibility(const Graph& g, int terms = 80);

}  // namespace syntonet::testkit
