#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace syntonet::testkit {

Graph random_connected_graph(Rng& rng, std::size_t n, double p_extra) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (NodeId v = 1; v < n; ++v) {
    const NodeId u = std::uniform_int_distribution<NodeId>(0, v - 1)(rng);
    pairs.emplace_back(u, v);
    used[u][v] = true;
  }
  std::bernoulli_distribution extra(p_extra);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (!used[u][v] && extra(rng)) pairs.emplace_back(u, v);
  const auto perm = random_permutation(rng, n);
  return relabel(Graph::unweighted(n, pairs), perm);
}

PartialSpectrum random_spectrum(Rng& rng, std::size_t max_partials, double lo, double hi) {
  const auto count = std::uniform_int_distribution<std::size_t>(1, max_partials)(rng);
  std::uniform_real_distribution<double> freq(lo, hi), amp(0.0, 1.0);
  std::uniform_int_distribution<int> grid(0, static_cast<int>((hi - lo) / 2.5));
  std::bernoulli_distribution on_grid(0.3);
  PartialSpectrum s{0.0, {}};
  for (std::size_t k = 0; k < count; ++k) {
    const double f = on_grid(rng) ? lo + 2.5 * grid(rng) : freq(rng);
    s.partials.push_back({f, 1.0 - amp(rng)});
  }
  std::sort(s.partials.begin(), s.partials.end(),
            [](const Partial& a, const Partial& b) { return a.frequency < b.frequency; });
  s.fundamental = s.partials.front().frequency;
  return s;
}

Graph relabel(const Graph& g, const std::vector<NodeId>& perm) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph::unweighted(g.node_count(), pairs);
}

std::vector<NodeId> random_permutation(Rng& rng, std::size_t n) {
  std::vector<NodeId> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph star_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId v = 1; v < n; ++v) pairs.emplace_back(0, v);
  return Graph::unweighted(n, pairs);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId v = 1; v < n; ++v) pairs.emplace_back(v - 1, v);
  return Graph::unweighted(n, pairs);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  return Graph::unweighted(n, pairs);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph::unweighted(n, pairs);
}

Graph complete_binary_tree(int depth) {
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId v = 1; v < n; ++v) pairs.emplace_back((v - 1) / 2, v);
  return Graph::unweighted(n, pairs);
}

}  // namespace syntonet::testkit
