#include "syntonet/graphmodels.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <random>
#include <unordered_set>

#include "syntonet/errors.hpp"

namespace syntonet {

namespace {

using Rng = std::mt19937_64;

std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

void check_probability(double p, std::string_view what) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(fmt::format("{} must lie in [0, 1], got {}", what, p));
}

Graph erdos_renyi(std::size_t n, const ErParams& prm, Rng& rng) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (prm.p >= 1.0 || uniform01(rng) < prm.p) edges.push_back({i, j, 1.0});
  return Graph(n, std::move(edges));
}

Graph watts_strogatz(std::size_t n, const WsParams& prm, Rng& rng) {
  const auto offsets = lattice_offsets(prm.lattice_degree);
  const auto R = static_cast<long>(prm.rows), C = static_cast<long>(prm.cols);

  std::vector<std::pair<NodeId, NodeId>> lattice;
  std::unordered_set<std::uint64_t> present;
  for (long r = 0; r < R; ++r) {
    for (long c = 0; c < C; ++c) {
      const auto u = static_cast<NodeId>(r * C + c);
      for (auto [dr, dc] : offsets) {
        const auto v = static_cast<NodeId>(((r + dr) % R + R) % R * C + ((c + dc) % C + C) % C);
        if (u == v || !present.insert(edge_key(u, v)).second)
          throw DomainError(fmt::format("WS: {}x{} lattice too small for degree {}", R, C, prm.lattice_degree));
        lattice.emplace_back(u, v);
      }
    }
  }

  std::vector<std::size_t> degree(n, prm.lattice_degree);
  for (auto& [u, v] : lattice) {
    if (!(uniform01(rng) < prm.rewire_p)) continue;
    if (degree[u] >= n - 1) continue;
    NodeId w;
    do {
      w = uniform_index(rng, n);
    } while (w == u || present.count(edge_key(u, w)));
    present.erase(edge_key(u, v));
    present.insert(edge_key(u, w));
    --degree[v];
    ++degree[w];
    v = w;
  }
  return Graph::unweighted(n, lattice);
}

Graph barabasi_albert(std::size_t n, const BaParams& prm, Rng& rng) {
  const std::size_t m = prm.attachments, m0 = prm.seed_clique;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<NodeId> endpoints;  // node repeated once per incident edge
  for (NodeId i = 0; i < m0; ++i) {
    for (NodeId j = i + 1; j < m0; ++j) {
      edges.emplace_back(i, j);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }
  std::vector<NodeId> targets;
  for (NodeId t = m0; t < n; ++t) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId cand = endpoints.empty() ? uniform_index(rng, t) : endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), cand) == targets.end()) targets.push_back(cand);
    }
    for (NodeId s : targets) {
      edges.emplace_back(s, t);
      endpoints.push_back(s);
      endpoints.push_back(t);
    }
  }
  return Graph::unweighted(n, edges);
}

Graph random_geometric(std::size_t n, const GeoParams& prm, Rng& rng) {
  std::vector<std::pair<double, double>> pos(n);
  for (NodeId i = 0; i < n; ++i) {
    const double r = static_cast<double>(i / prm.cols), c = static_cast<double>(i % prm.cols);
    const double dx = uniform01(rng);
    const double dy = uniform01(rng);
    pos[i] = {c + dx, r + dy};
  }
  const double r2 = prm.radius * prm.radius;
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double dx = pos[i].first - pos[j].first, dy = pos[i].second - pos[j].second;
      if (dx * dx + dy * dy <= r2) edges.push_back({i, j, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph stochastic_block(std::size_t n, const SbmParams& prm, Rng& rng) {
  std::vector<std::size_t> block(n);
  std::size_t v = 0;
  for (std::size_t b = 0; b < prm.block_sizes.size(); ++b)
    for (std::size_t k = 0; k < prm.block_sizes[b]; ++k) block[v++] = b;
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (uniform01(rng) < (block[i] == block[j] ? prm.p_in : prm.p_out)) edges.push_back({i, j, 1.0});
  return Graph(n, std::move(edges));
}

double mean_degree_of_geo(std::size_t n, GeoParams prm, const std::vector<std::uint64_t>& seeds) {
  double total = 0.0;
  for (auto s : seeds) {
    Rng rng(s);
    total += random_geometric(n, prm, rng).mean_degree();
  }
  return total / static_cast<double>(seeds.size());
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::ER: return "ER";
    case ModelKind::WS: return "WS";
    case ModelKind::BA: return "BA";
    case ModelKind::GEO: return "GEO";
    case ModelKind::SBM: return "SBM";
  }
  return "?";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(master_seed ^ h) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::pair<std::size_t, std::size_t> lattice_shape(std::size_t n) {
  if (n == 0) throw DomainError("lattice_shape: n must be positive");
  std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (rows > 1 && n % rows != 0) --rows;
  return {rows, n / rows};
}

std::vector<std::pair<int, int>> lattice_offsets(std::size_t lattice_degree) {
  if (lattice_degree == 0 || lattice_degree % 2 != 0)
    throw DomainError(fmt::format("lattice degree must be positive and even, got {}", lattice_degree));
  const std::size_t want = lattice_degree / 2;
  const int reach = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(want)))) + 1;
  std::vector<std::pair<int, int>> all;
  for (int dr = 0; dr <= reach; ++dr)
    for (int dc = -reach; dc <= reach; ++dc)
      if (dr > 0 || dc > 0) all.emplace_back(dr, dc);
  std::sort(all.begin(), all.end(), [](auto a, auto b) {
    const int la = a.first * a.first + a.second * a.second, lb = b.first * b.first + b.second * b.second;
    if (la != lb) return la < lb;
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  all.resize(want);
  return all;
}

std::vector<ModelClass> default_model_classes() {
  return {{"ER", ModelKind::ER, 0.0},  {"WS1", ModelKind::WS, 0.01}, {"WS2", ModelKind::WS, 0.1},
          {"BA", ModelKind::BA, 0.0},  {"GEO", ModelKind::GEO, 0.0}, {"SBM", ModelKind::SBM, 0.0}};
}

void validate(const ModelSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 4) throw DomainError(fmt::format("model needs at least 4 nodes, got {}", n));
  if (!(spec.target_mean_degree > 0.0) || !(spec.target_mean_degree <= static_cast<double>(n - 1)))
    throw DomainError(fmt::format("target mean degree {} outside (0, {}]", spec.target_mean_degree, n - 1));

  std::visit(
      [n](const auto& prm) {
        using T = std::decay_t<decltype(prm)>;
        if constexpr (std::is_same_v<T, ErParams>) {
          check_probability(prm.p, "ER edge probability");
        } else if constexpr (std::is_same_v<T, WsParams>) {
          check_probability(prm.rewire_p, "WS rewiring probability");
          if (prm.rows * prm.cols != n) throw DomainError("WS lattice shape does not cover n nodes");
          if (prm.lattice_degree == 0 || prm.lattice_degree % 2 || prm.lattice_degree >= n)
            throw DomainError(fmt::format("WS lattice degree {} invalid for n = {}", prm.lattice_degree, n));
        } else if constexpr (std::is_same_v<T, BaParams>) {
          if (prm.attachments < 1 || prm.attachments >= n)
            throw DomainError(fmt::format("BA attachments m = {} must satisfy 1 <= m < n = {}", prm.attachments, n));
          if (prm.seed_clique < prm.attachments || prm.seed_clique > n)
            throw DomainError(fmt::format("BA seed clique {} must lie in [m, n]", prm.seed_clique));
        } else if constexpr (std::is_same_v<T, GeoParams>) {
          if (prm.rows * prm.cols != n) throw DomainError("GEO grid shape does not cover n nodes");
          if (!(prm.radius >= 0.0)) throw DomainError("GEO radius must be non-negative");
        } else {
          check_probability(prm.p_in, "SBM p_in");
          check_probability(prm.p_out, "SBM p_out");
          std::size_t total = 0;
          for (auto s : prm.block_sizes) total += s;
          if (total != n) throw DomainError("SBM block sizes do not sum to n");
        }
      },
      spec.params);
}

Graph generate(const ModelSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  return std::visit(
      [&](const auto& prm) -> Graph {
        using T = std::decay_t<decltype(prm)>;
        if constexpr (std::is_same_v<T, ErParams>) return erdos_renyi(spec.n, prm, rng);
        else if constexpr (std::is_same_v<T, WsParams>) return watts_strogatz(spec.n, prm, rng);
        else if constexpr (std::is_same_v<T, BaParams>) return barabasi_albert(spec.n, prm, rng);
        else if constexpr (std::is_same_v<T, GeoParams>) return random_geometric(spec.n, prm, rng);
        else return stochastic_block(spec.n, prm, rng);
      },
      spec.params);
}

ModelSpec fit_to_degree(ModelKind kind, std::size_t n, double k, std::uint64_t seed, double ws_rewire_p) {
  ModelSpec spec{n, k, seed, ErParams{}};
  if (n < 4) throw DomainError(fmt::format("model needs at least 4 nodes, got {}", n));
  if (!(k > 0.0) || !(k < static_cast<double>(n - 1)))
    throw DomainError(fmt::format("mean degree {} unreachable with {} nodes", k, n));
  const double nd = static_cast<double>(n);

  switch (kind) {
    case ModelKind::ER:
      spec.params = ErParams{k / (nd - 1.0)};
      break;

    case ModelKind::WS: {
      auto [rows, cols] = lattice_shape(n);
      // nearest even degree, ties resolved downwards
      auto deg = static_cast<std::size_t>(2.0 * std::ceil(k / 2.0 - 0.5));
      deg = std::max<std::size_t>(deg, 2);
      spec.params = WsParams{rows, cols, deg, ws_rewire_p};
      break;
    }

    case ModelKind::BA: {
      const auto m = static_cast<std::size_t>(std::max(1LL, std::llround(k / 2.0)));
      if (m >= n) throw DomainError(fmt::format("BA: m = {} infeasible for n = {}", m, n));
      // seed clique sized so the final edge count lands nearest round(k n / 2)
      const auto target = static_cast<double>(std::llround(k * nd / 2.0));
      std::size_t best = m + 1 <= n ? m + 1 : m;
      double best_err = INFINITY;
      for (std::size_t m0 = std::max<std::size_t>(m, 2); m0 <= n; ++m0) {
        const double e = static_cast<double>(m0 * (m0 - 1) / 2 + (n - m0) * m);
        const double err = std::fabs(e - target);
        if (err < best_err) {
          best_err = err;
          best = m0;
        } else if (e > target) {
          break;
        }
      }
      spec.params = BaParams{m, best};
      break;
    }

    case ModelKind::GEO: {
      auto [rows, cols] = lattice_shape(n);
      std::vector<std::uint64_t> trials;
      for (std::uint64_t t = 0; t < 20; ++t) trials.push_back(derive_seed(seed, "GEO-fit", t));
      GeoParams prm{rows, cols, 0.0};
      double lo = 0.0, hi = std::hypot(static_cast<double>(rows), static_cast<double>(cols));
      double best_err = INFINITY;
      double best_r = hi;
      for (int it = 0; it < 100; ++it) {
        prm.radius = 0.5 * (lo + hi);
        const double got = mean_degree_of_geo(n, prm, trials);
        const double err = std::fabs(got - k) / k;
        if (err < best_err) {
          best_err = err;
          best_r = prm.radius;
        }
        if (err <= 0.001) break;
        (got < k ? lo : hi) = prm.radius;
      }
      if (best_err > 0.02)
        throw DomainError(fmt::format("GEO: no radius reaches mean degree {} within 2% (best {:.2f}%)", k,
                                      100.0 * best_err));
      prm.radius = best_r;
      spec.params = prm;
      break;
    }

    case ModelKind::SBM: {
      const std::size_t a = n / 2, b = n - n / 2;
      // expected degree with p_in = 4 p_out, averaged over the two block sizes
      const double half = nd / 2.0;
      const double p_out = k / (4.0 * (half - 1.0) + half);
      const double p_in = 4.0 * p_out;
      if (p_in > 1.0) throw DomainError(fmt::format("SBM: mean degree {} needs p_in = {} > 1", k, p_in));
      spec.params = SbmParams{{a, b}, p_in, p_out};
      break;
    }
  }
  validate(spec);
  return spec;
}

}  // namespace syntonet
