#include "syntonet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <queue>

#include "syntonet/errors.hpp"

namespace syntonet {

namespace {

void require_connected(const Graph& g, std::string_view what) {
  if (g.weighted()) throw DomainError(fmt::format("{}: expects an unweighted graph", what));
  if (!is_connected(g)) throw DomainError(fmt::format("{}: graph is empty or disconnected", what));
}

void require_level(int h, std::string_view what) {
  if (h < 1) throw DomainError(fmt::format("{}: level must be >= 1, got {}", what, h));
}

/// v * P for the row-stochastic walk matrix P = D^-1 A.
void walk_step(const Graph& g, const std::vector<double>& v, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (v[i] == 0.0) continue;
    const double share = v[i] / static_cast<double>(g.degree(i));
    for (NodeId j : g.neighbors(i)) out[j] += share;
  }
}

double exp_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return std::exp(h);
}

/// Brandes single-source pass: BFS order, predecessor lists and path counts.
struct ShortestPathDag {
  std::vector<NodeId> order;
  std::vector<std::vector<NodeId>> pred;
  std::vector<double> sigma;
  std::vector<int> dist;
};

void shortest_path_dag(const Graph& g, NodeId s, ShortestPathDag& d) {
  const std::size_t n = g.node_count();
  d.order.clear();
  d.pred.assign(n, {});
  d.sigma.assign(n, 0.0);
  d.dist.assign(n, -1);
  d.sigma[s] = 1.0;
  d.dist[s] = 0;
  std::queue<NodeId> q;
  q.push(s);
  while (!q.empty()) {
    const NodeId v = q.front();
    q.pop();
    d.order.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (d.dist[w] < 0) {
        d.dist[w] = d.dist[v] + 1;
        q.push(w);
      }
      if (d.dist[w] == d.dist[v] + 1) {
        d.sigma[w] += d.sigma[v];
        d.pred[w].push_back(v);
      }
    }
  }
}

}  // namespace

std::vector<double> degree(const Graph& g) {
  require_connected(g, "degree");
  std::vector<double> k(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) k[v] = static_cast<double>(g.degree(v));
  return k;
}

std::vector<double> clustering(const Graph& g) {
  require_connected(g, "clustering");
  std::vector<double> c(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto& nb = g.neighbors(v);
    const std::size_t k = nb.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (g.has_edge(nb[a], nb[b])) ++links;
    c[v] = 2.0 * static_cast<double>(links) / static_cast<double>(k * (k - 1));
  }
  return c;
}

std::vector<double> hierarchical_degree(const Graph& g, int h) {
  require_connected(g, "hierarchical_degree");
  require_level(h, "hierarchical_degree");
  std::vector<double> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto d = bfs_distances(g, v);
    out[v] = static_cast<double>(std::count(d.begin(), d.end(), h));
  }
  return out;
}

std::vector<double> accessibility(const Graph& g, int h) {
  require_connected(g, "accessibility");
  require_level(h, "accessibility");
  const std::size_t n = g.node_count();
  std::vector<double> out(n), p(n), next(n);
  for (NodeId i = 0; i < n; ++i) {
    std::fill(p.begin(), p.end(), 0.0);
    p[i] = 1.0;
    for (int step = 0; step < h; ++step) {
      walk_step(g, p, next);
      p.swap(next);
    }
    out[i] = exp_entropy(p);
  }
  return out;
}

std::vector<double> generalized_accessibility(const Graph& g) {
  require_connected(g, "generalized_accessibility");
  const std::size_t n = g.node_count();
  std::vector<double> out(n), term(n), next(n), sum(n);
  for (NodeId i = 0; i < n; ++i) {
    std::fill(term.begin(), term.end(), 0.0);
    term[i] = 1.0;
    sum = term;
    for (int k = 1; k < 10000; ++k) {
      walk_step(g, term, next);
      double largest = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        next[j] /= static_cast<double>(k);
        largest = std::max(largest, next[j]);
      }
      term.swap(next);
      if (largest < 1e-12) break;
      for (std::size_t j = 0; j < n; ++j) sum[j] += term[j];
    }
    const double scale = std::exp(-1.0);
    for (double& x : sum) x *= scale;
    out[i] = exp_entropy(sum);
  }
  return out;
}

std::vector<double> eigenvector_centrality(const Graph& g) {
  require_connected(g, "eigenvector_centrality");
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  for (int it = 0; it < 100000; ++it) {
    for (NodeId v = 0; v < n; ++v) {
      double s = x[v];
      for (NodeId w : g.neighbors(v)) s += x[w];
      y[v] = s;
    }
    double norm = 0.0;
    for (double t : y) norm += t * t;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      y[v] /= norm;
      change = std::max(change, std::fabs(y[v] - x[v]));
    }
    x.swap(y);
    if (change < 1e-10) return x;
  }
  throw NumericError("eigenvector_centrality: power iteration did not converge in 100000 steps");
}

std::vector<double> betweenness(const Graph& g) {
  require_connected(g, "betweenness");
  const std::size_t n = g.node_count();
  std::vector<double> cb(n, 0.0), delta(n);
  ShortestPathDag d;
  for (NodeId s = 0; s < n; ++s) {
    shortest_path_dag(g, s, d);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : d.pred[w]) delta[v] += d.sigma[v] / d.sigma[w] * (1.0 + delta[w]);
      if (w != s) cb[w] += delta[w];
    }
  }
  // every unordered pair was visited from both ends
  const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  for (double& x : cb) x = pairs > 0.0 ? x / 2.0 / pairs : 0.0;
  return cb;
}

std::vector<double> edge_betweenness(const Graph& g) {
  require_connected(g, "edge_betweenness");
  const std::size_t n = g.node_count();
  std::vector<double> eb(g.edge_count(), 0.0), delta(n);
  ShortestPathDag d;
  for (NodeId s = 0; s < n; ++s) {
    shortest_path_dag(g, s, d);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : d.pred[w]) {
        const double c = d.sigma[v] / d.sigma[w] * (1.0 + delta[w]);
        eb[g.edge_index(v, w)] += c;
        delta[v] += c;
      }
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  for (double& x : eb) x = x / 2.0 / pairs;
  return eb;
}

std::vector<double> eccentricity(const Graph& g) {
  require_connected(g, "eccentricity");
  std::vector<double> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto d = bfs_distances(g, v);
    out[v] = static_cast<double>(*std::max_element(d.begin(), d.end()));
  }
  return out;
}

const std::array<std::string_view, kMeasurementCount>& measurement_names() {
  static const std::array<std::string_view, kMeasurementCount> names = {
      "degree",
      "clustering",
      "hierarchical_degree_2",
      "hierarchical_degree_3",
      "accessibility_2",
      "accessibility_3",
      "generalized_accessibility",
      "backbone_symmetry_2",
      "backbone_symmetry_3",
      "backbone_symmetry_4",
      "merged_symmetry_2",
      "merged_symmetry_3",
      "merged_symmetry_4",
      "eigenvector_centrality",
      "betweenness",
      "edge_betweenness",
      "eccentricity",
  };
  return names;
}

std::vector<std::string> feature_names() {
  std::vector<std::string> out;
  out.reserve(kFeatureCount);
  for (auto name : measurement_names()) {
    out.push_back(fmt::format("{}_mean", name));
    out.push_back(fmt::format("{}_std", name));
  }
  return out;
}

MeasurementSet measure(const Graph& g) {
  require_connected(g, "measure");
  MeasurementSet m;
  auto& v = m.values;
  v[0] = degree(g);
  v[1] = clustering(g);
  v[2] = hierarchical_degree(g, 2);
  v[3] = hierarchical_degree(g, 3);
  v[4] = accessibility(g, 2);
  v[5] = accessibility(g, 3);
  v[6] = generalized_accessibility(g);
  auto backbone = concentric_symmetry_levels(g, 4, SymmetryVariant::Backbone);
  auto merged = concentric_symmetry_levels(g, 4, SymmetryVariant::Merged);
  for (int h = 2; h <= 4; ++h) {
    v[5 + h] = std::move(backbone[h - 1]);
    v[8 + h] = std::move(merged[h - 1]);
  }
  v[13] = eigenvector_centrality(g);
  v[14] = betweenness(g);
  v[15] = edge_betweenness(g);
  v[16] = eccentricity(g);
  return m;
}

MeanStd mean_std(std::vector<double> values) {
  if (values.empty()) return {0.0, 0.0};
  std::sort(values.begin(), values.end());
  double s = 0.0;
  for (double x : values) s += x;
  const double mean = s / static_cast<double>(values.size());
  std::vector<double> sq;
  sq.reserve(values.size());
  for (double x : values) sq.push_back((x - mean) * (x - mean));
  std::sort(sq.begin(), sq.end());
  double ss = 0.0;
  for (double x : sq) ss += x;
  return {mean, std::sqrt(ss / static_cast<double>(values.size()))};
}

FeatureVector summarize(const MeasurementSet& m) {
  FeatureVector f;
  for (std::size_t k = 0; k < kMeasurementCount; ++k) {
    const auto ms = mean_std(m.values[k]);
    f.values[2 * k] = ms.mean;
    f.values[2 * k + 1] = ms.std;
  }
  return f;
}

FeatureVector feature_vector(const Graph& g) {
  require_connected(g, "feature_vector");
  if (g.node_count() < 5)
    throw DomainError(fmt::format("feature_vector: need at least 5 nodes, got {}", g.node_count()));
  return summarize(measure(g));
}

}  // namespace syntonet
