#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace syntonet {

using NodeId = std::size_t;

struct Edge {
  NodeId u;  // u < v
  NodeId v;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph. Edges are stored with u < v, sorted, without
/// duplicates; unweighted graphs carry weight 1 on every edge.
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError on self-loops, duplicates or out-of-range endpoints.
  /// Endpoint order within an edge is normalised.
  Graph(std::size_t node_count, std::vector<Edge> edges, bool weighted = false,
        std::vector<std::string> labels = {});

  static Graph unweighted(std::size_t node_count, const std::vector<std::pair<NodeId, NodeId>>& pairs,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool weighted() const { return weighted_; }
  bool empty() const { return n_ == 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_[v]; }
  const std::vector<std::vector<NodeId>>& adjacency() const { return adjacency_; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  bool has_edge(NodeId a, NodeId b) const;

  /// Label of node v; falls back to its index when no labels were given.
  std::string label(NodeId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  double mean_degree() const;

  /// Index of edge {a, b} in edges(), or edge_count() if absent.
  std::size_t edge_index(NodeId a, NodeId b) const;

 private:
  std::size_t n_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::string> labels_;
};

/// Shortest-path hop distances from `source`; unreachable nodes get -1.
std::vector<int> bfs_distances(const Graph& g, NodeId source);

bool is_connected(const Graph& g);

}  // namespace syntonet
