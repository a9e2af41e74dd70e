#include "syntonet/syntony.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "syntonet/errors.hpp"

namespace syntonet {

namespace {

double ascending_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

const std::vector<Partial>& sorted_view(const PartialSpectrum& s, std::vector<Partial>& scratch) {
  const auto by_freq = [](const Partial& a, const Partial& b) { return a.frequency < b.frequency; };
  if (std::is_sorted(s.partials.begin(), s.partials.end(), by_freq)) return s.partials;
  scratch = s.partials;
  std::sort(scratch.begin(), scratch.end(), by_freq);
  return scratch;
}

}  // namespace

std::string_view to_string(SyntonyKind kind) {
  return kind == SyntonyKind::Consonance ? "consonance" : "dissonance";
}

void validate(const SyntonyWindows& w) {
  if (!(w.delta_min > 0.0) || !(w.delta_max > w.delta_min) || !std::isfinite(w.delta_max))
    throw DomainError(fmt::format("syntony windows need 0 < delta_min < delta_max, got {} and {}", w.delta_min,
                                  w.delta_max));
}

PairSyntony pair_syntony(const PartialSpectrum& x, const PartialSpectrum& y, const SyntonyWindows& w) {
  validate(w);
  if (x.partials.empty() || y.partials.empty()) throw DomainError("pair syntony: empty spectrum");

  std::vector<Partial> xs_scratch, ys_scratch;
  const auto& xs = sorted_view(x, xs_scratch);
  const auto& ys = sorted_view(y, ys_scratch);

  const double half_min = w.delta_min / 2.0;
  const double half_max = w.delta_max / 2.0;

  thread_local std::vector<double> cons_terms, diss_terms;
  cons_terms.clear();
  diss_terms.clear();

  // Both lists ascend, so the window [x - half_max, x + half_max] only moves right.
  std::size_t lo = 0;
  for (const auto& px : xs) {
    while (lo < ys.size() && ys[lo].frequency <= px.frequency && px.frequency - ys[lo].frequency >= half_max) ++lo;
    for (std::size_t j = lo; j < ys.size(); ++j) {
      const double d = std::fabs(px.frequency - ys[j].frequency);
      if (ys[j].frequency >= px.frequency && d >= half_max) break;
      if (d < half_min)
        cons_terms.push_back(px.amplitude * ys[j].amplitude);
      else if (d < half_max)
        diss_terms.push_back(px.amplitude * ys[j].amplitude);
    }
  }
  return {ascending_sum(cons_terms), ascending_sum(diss_terms)};
}

double pair_consonance(const PartialSpectrum& x, const PartialSpectrum& y, const SyntonyWindows& w) {
  return pair_syntony(x, y, w).consonance;
}

double pair_dissonance(const PartialSpectrum& x, const PartialSpectrum& y, const SyntonyWindows& w) {
  return pair_syntony(x, y, w).dissonance;
}

SyntonyMatrix::SyntonyMatrix(SyntonyKind kind, std::size_t n, std::vector<std::string> labels)
    : kind_(kind), n_(n), w_(n * n, 0.0), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) throw DomainError("syntony matrix: label count mismatch");
}

void SyntonyMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i == j) throw DomainError("syntony matrix: diagonal is fixed at zero");
  if (!(value >= 0.0)) throw DomainError("syntony matrix: weights must be non-negative");
  w_[i * n_ + j] = value;
  w_[j * n_ + i] = value;
}

std::size_t SyntonyMatrix::nonzero_pairs() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (w_[i * n_ + j] > 0.0) ++count;
  return count;
}

std::vector<PartialSpectrum> build_spectra(const Scale& scale, const AnharmonicityLaw& law, double cutoff) {
  std::vector<PartialSpectrum> spectra;
  spectra.reserve(scale.notes.size());
  for (const auto& note : scale.notes) spectra.push_back(build_spectrum(note.frequency, law, cutoff));
  return spectra;
}

SyntonyMatrices build_syntony_matrices(const Scale& scale, const AnharmonicityLaw& law,
                                       const SyntonyWindows& windows, double cutoff) {
  validate(windows);
  const std::size_t n = scale.notes.size();
  if (n < 2) throw DomainError("syntony matrix: scale needs at least two notes");

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& note : scale.notes) labels.push_back(note.label);

  const auto spectra = build_spectra(scale, law, cutoff);
  SyntonyMatrices out{SyntonyMatrix(SyntonyKind::Consonance, n, labels),
                      SyntonyMatrix(SyntonyKind::Dissonance, n, labels)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto s = pair_syntony(spectra[i], spectra[j], windows);
      out.consonance.set(i, j, s.consonance);
      out.dissonance.set(i, j, s.dissonance);
    }
  }
  return out;
}

SyntonyMatrix build_syntony_matrix(const Scale& scale, const AnharmonicityLaw& law, const SyntonyWindows& windows,
                                   SyntonyKind kind, double cutoff) {
  auto both = build_syntony_matrices(scale, law, windows, cutoff);
  return kind == SyntonyKind::Consonance ? std::move(both.consonance) : std::move(both.dissonance);
}

std::size_t target_edge_count(double mean_degree, std::size_t n) {
  if (!(mean_degree > 0.0)) throw DomainError("target mean degree must be positive");
  return static_cast<std::size_t>(std::llround(mean_degree * static_cast<double>(n) / 2.0));
}

Graph threshold_graph(const SyntonyMatrix& m, std::size_t target_edges) {
  if (target_edges == 0) throw DomainError("threshold_graph: target edge count must be positive");
  std::vector<Edge> candidates;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) > 0.0) candidates.push_back({i, j, m(i, j)});

  if (candidates.size() < target_edges)
    throw DomainError(fmt::format("threshold_graph: {} edges requested but only {} nonzero pairs (short by {})",
                                  target_edges, candidates.size(), target_edges - candidates.size()));

  const auto heavier = [](const Edge& a, const Edge& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  };
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(target_edges),
                    candidates.end(), heavier);
  candidates.resize(target_edges);
  return Graph(m.size(), std::move(candidates), false, m.labels());
}

ComponentGraph largest_component(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw DomainError("largest_component: empty graph");

  std::vector<std::size_t> comp(n, n);
  std::size_t best = 0, best_size = 0, count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<NodeId> stack{s};
    comp[s] = count;
    std::size_t size = 0;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId w : g.neighbors(v)) {
        if (comp[w] == n) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    // components are discovered in order of their smallest node, so '>' keeps the earliest on ties
    if (size > best_size) {
      best_size = size;
      best = count;
    }
    ++count;
  }

  ComponentGraph out;
  std::vector<NodeId> remap(n, n);
  for (NodeId v = 0; v < n; ++v) {
    if (comp[v] == best) {
      remap[v] = out.original_ids.size();
      out.original_ids.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (comp[e.u] == best) edges.push_back({remap[e.u], remap[e.v], e.weight});
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (NodeId v : out.original_ids) labels.push_back(g.labels()[v]);
  out.graph = Graph(out.original_ids.size(), std::move(edges), g.weighted(), std::move(labels));
  return out;
}

}  // namespace syntonet
