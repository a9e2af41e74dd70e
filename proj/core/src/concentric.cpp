#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "syntonet/errors.hpp"
#include "syntonet/metrics.hpp"

namespace syntonet {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

double normalized_exp_entropy(const std::vector<double>& mass) {
  double total = 0.0;
  std::size_t support = 0;
  for (double m : mass) {
    if (m > 0.0) {
      total += m;
      ++support;
    }
  }
  if (support == 0) return 1.0;
  double h = 0.0;
  for (double m : mass) {
    if (m > 0.0) {
      const double p = m / total;
      h -= p * std::log(p);
    }
  }
  return std::min(1.0, std::exp(h) / static_cast<double>(support));
}

/// Symmetry values at levels 1..max_h for a single source node.
///
/// Vertices of the (possibly contracted) layered graph are identified by a
/// representative node id; `group[v]` maps every node to its representative.
void symmetry_from(const Graph& g, NodeId source, int max_h, SymmetryVariant variant, DisjointSets& sets,
                   std::vector<std::vector<double>>& out) {
  const std::size_t n = g.node_count();
  const auto dist = bfs_distances(g, source);

  std::iota(sets.parent.begin(), sets.parent.end(), 0);
  if (variant == SymmetryVariant::Merged) {
    for (const auto& e : g.edges())
      if (dist[e.u] == dist[e.v] && dist[e.u] <= max_h) sets.unite(e.u, e.v);
  }

  // outward adjacency between representatives, deduplicated
  std::vector<std::vector<NodeId>> outward(n);
  for (const auto& e : g.edges()) {
    NodeId a = e.u, b = e.v;
    if (dist[a] == dist[b] || std::max(dist[a], dist[b]) > max_h) continue;
    if (dist[a] > dist[b]) std::swap(a, b);
    outward[sets.find(a)].push_back(sets.find(b));
  }
  for (auto& o : outward) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }

  std::vector<double> mass(n, 0.0), next(n, 0.0);
  mass[sets.find(source)] = 1.0;
  for (int h = 1; h <= max_h; ++h) {
    std::fill(next.begin(), next.end(), 0.0);
    for (NodeId v = 0; v < n; ++v) {
      if (mass[v] == 0.0 || outward[v].empty()) continue;
      const double share = mass[v] / static_cast<double>(outward[v].size());
      for (NodeId w : outward[v]) next[w] += share;
    }
    mass.swap(next);
    out[h - 1][source] = normalized_exp_entropy(mass);
  }
}

}  // namespace

std::vector<std::vector<double>> concentric_symmetry_levels(const Graph& g, int max_h, SymmetryVariant variant) {
  if (max_h < 1) throw DomainError(fmt::format("concentric_symmetry: level must be >= 1, got {}", max_h));
  if (g.weighted() || !is_connected(g)) throw DomainError("concentric_symmetry: graph is empty or disconnected");
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> out(static_cast<std::size_t>(max_h), std::vector<double>(n, 1.0));
  DisjointSets sets(n);
  for (NodeId v = 0; v < n; ++v) symmetry_from(g, v, max_h, variant, sets, out);
  return out;
}

std::vector<double> concentric_symmetry(const Graph& g, int h, SymmetryVariant variant) {
  auto levels = concentric_symmetry_levels(g, h, variant);
  return std::move(levels[static_cast<std::size_t>(h) - 1]);
}

}  // namespace syntonet
