#include "syntonet/graph.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <queue>

#include "syntonet/errors.hpp"

namespace syntonet {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges, bool weighted, std::vector<std::string> labels)
    : n_(node_count), weighted_(weighted), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_)
    throw DomainError(fmt::format("graph: {} labels for {} nodes", labels_.size(), n_));
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw DomainError(fmt::format("graph: edge ({}, {}) out of range", e.u, e.v));
    if (e.u == e.v) throw DomainError(fmt::format("graph: self-loop at node {}", e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!weighted_) e.weight = 1.0;
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v)
      throw DomainError(fmt::format("graph: duplicate edge ({}, {})", edges_[k].u, edges_[k].v));
  }
  adjacency_.assign(n_, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph Graph::unweighted(std::size_t node_count, const std::vector<std::pair<NodeId, NodeId>>& pairs,
                        std::vector<std::string> labels) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b, 1.0});
  return Graph(node_count, std::move(edges), false, std::move(labels));
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= n_ || b >= n_) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::string Graph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

double Graph::mean_degree() const {
  return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(n_);
}

std::size_t Graph::edge_index(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b, 0.0},
                             [](const Edge& x, const Edge& y) { return x.u != y.u ? x.u < y.u : x.v < y.v; });
  if (it != edges_.end() && it->u == a && it->v == b) return static_cast<std::size_t>(it - edges_.begin());
  return edges_.size();
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<NodeId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const NodeId v = q.front();
    q.pop();
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

}  // namespace syntonet
