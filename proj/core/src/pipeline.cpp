#include "syntonet/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "syntonet/errors.hpp"
#include "syntonet/metrics.hpp"
#include "syntonet/plot.hpp"

namespace syntonet {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMinComponentNodes = 5;

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

/// Files of one run, written together with the manifest at the end.
class OutputSet {
 public:
  void add(std::string path, std::string bytes) { files_[std::move(path)] = std::move(bytes); }

  template <class Writer>
  void add_stream(std::string path, Writer&& writer) {
    std::ostringstream os;
    writer(os);
    add(std::move(path), os.str());
  }

  std::vector<ManifestEntry> commit(const std::filesystem::path& dir) const {
    std::vector<ManifestEntry> entries;
    for (const auto& [path, bytes] : files_) {
      if (!dir.empty()) write_file(dir / path, bytes);
      entries.push_back({path, sha256_hex(bytes), bytes.size()});
    }
    return entries;
  }

 private:
  std::map<std::string, std::string> files_;  // ordered, so manifests are stable
};

void prepare_output_dir(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const auto& dir = cfg.output_dir;
  if (dir.empty()) return;
  if (fs::exists(dir)) {
    if (!fs::is_directory(dir)) throw std::runtime_error(fmt::format("{} exists and is not a directory", dir.string()));
    if (!fs::is_empty(dir)) {
      if (!cfg.overwrite)
        throw std::runtime_error(fmt::format(
            "output directory {} is not empty; refusing to mix runs (pass --overwrite to replace a previous run)",
            dir.string()));
      if (!fs::exists(dir / "manifest.json"))
        throw std::runtime_error(
            fmt::format("refusing to overwrite {}: it holds no manifest.json from a previous run", dir.string()));
      for (const auto& entry : fs::directory_iterator(dir)) fs::remove_all(entry.path());
    }
  }
  fs::create_directories(dir);
}

Json config_json(const ExperimentConfig& cfg) {
  Json j;
  j["temperaments"] = Json::array();
  for (auto t : cfg.temperaments) j["temperaments"].push_back(std::string(to_string(t)));
  j["kinds"] = Json::array();
  for (auto k : cfg.kinds) j["kinds"].push_back(std::string(to_string(k)));
  j["base_frequency"] = cfg.base_frequency;
  j["octaves"] = cfg.octaves;
  j["alpha"] = cfg.alpha;
  j["delta_min"] = cfg.delta_min;
  j["delta_max"] = cfg.delta_max;
  j["cutoff"] = cfg.cutoff;
  j["beta_start"] = cfg.beta_start;
  j["beta_stop"] = cfg.beta_stop;
  j["beta_step"] = cfg.beta_step;
  j["beta_refine"] = cfg.beta_refine;
  j["layout_betas"] = cfg.layout_betas;
  j["target_mean_degree"] = cfg.target_mean_degree;
  j["model_samples"] = cfg.model_samples;
  j["master_seed"] = cfg.master_seed;
  j["model_classes"] = Json::array();
  for (const auto& mc : default_model_classes()) {
    Json m;
    m["label"] = mc.label;
    m["kind"] = std::string(to_string(mc.kind));
    if (mc.kind == ModelKind::WS) m["rewire_p"] = mc.ws_rewire_p;
    j["model_classes"].push_back(m);
  }
  return j;
}

std::string manifest_text(const RunManifest& m) {
  Json j;
  j["tool"] = "syntonet";
  j["version"] = m.version;
  j["command"] = m.command;
  j["config"] = Json::parse(m.config_json);
  j["files"] = Json::array();
  for (const auto& f : m.files) j["files"].push_back({{"path", f.path}, {"sha256", f.sha256}, {"bytes", f.bytes}});
  if (m.seconds) j["timing"] = {{"seconds", *m.seconds}};
  return j.dump(2) + "\n";
}

std::string file_stem(TemperamentName t, SyntonyKind k) { return fmt::format("{}_{}", to_string(t), to_string(k)); }

struct Shared {
  ModelCorpus corpus;
  PcaModel pca;
};

Shared models_and_pca(const ExperimentConfig& cfg, OutputSet& out) {
  Shared s;
  s.corpus = build_model_corpus(cfg);
  std::vector<FeatureVector> rows;
  for (const auto& r : s.corpus.records) rows.push_back(r.features);
  s.pca = fit_pca(rows);
  for (auto& r : s.corpus.records) r.point = project2(s.pca, r.features);

  out.add_stream("models/batch.csv", [&](std::ostream& os) { write_batch_manifest_csv(os, s.corpus.batch); });
  out.add_stream("models/features.csv", [&](std::ostream& os) { write_features_csv(os, s.corpus.records); });
  out.add_stream("pca/pca_model.csv", [&](std::ostream& os) { write_pca_csv(os, s.pca, feature_names()); });
  return s;
}

PlotStyle base_style(const PcaModel& pca, std::string title) {
  PlotStyle style;
  style.title = std::move(title);
  if (!pca.explained_variance_ratio.empty())
    style.x_label = fmt::format("PC1 ({:.2f}%)", 100.0 * pca.explained_variance_ratio[0]);
  if (pca.explained_variance_ratio.size() > 1)
    style.y_label = fmt::format("PC2 ({:.2f}%)", 100.0 * pca.explained_variance_ratio[1]);
  return style;
}

void write_skipped(OutputSet& out, const std::string& path, const std::vector<SkippedJob>& skipped) {
  out.add_stream(path, [&](std::ostream& os) {
    os << "temperament,kind,beta,reason\n";
    for (const auto& s : skipped) {
      std::string reason = s.reason;
      std::replace(reason.begin(), reason.end(), ',', ';');
      os << s.temperament << ',' << s.kind << ',' << format_number(s.beta) << ',' << reason << '\n';
    }
  });
}

std::vector<SyntonetOutcome> evaluate(const ExperimentConfig& cfg, TemperamentName temperament, double beta,
                                      std::optional<SyntonyMatrices>* keep) {
  const auto scale = build_scale(temperament_table(temperament), cfg.base_frequency, cfg.octaves);
  const AnharmonicityLaw law{beta, cfg.alpha};
  const SyntonyWindows windows{cfg.delta_min, cfg.delta_max};
  auto matrices = build_syntony_matrices(scale, law, windows, cfg.cutoff);
  const std::size_t target = target_edge_count(cfg.target_mean_degree, scale.notes.size());

  std::vector<SyntonetOutcome> out;
  for (auto kind : cfg.kinds) {
    const auto& m = kind == SyntonyKind::Consonance ? matrices.consonance : matrices.dissonance;
    SyntonetOutcome o{kind, {}, {}, {}, std::nullopt};
    o.record.source = "syntonet";
    o.record.group = std::string(to_string(temperament));
    o.record.kind = std::string(to_string(kind));
    o.record.beta = beta;
    try {
      o.thresholded = threshold_graph(m, target);
    } catch (const DomainError& e) {
      o.skipped = e.what();
      out.push_back(std::move(o));
      continue;
    }
    o.component = largest_component(o.thresholded);
    o.record.nodes = o.component.graph.node_count();
    o.record.edges = o.component.graph.edge_count();
    if (o.record.nodes < kMinComponentNodes) {
      o.skipped = fmt::format("largest component has {} nodes (< {})", o.record.nodes, kMinComponentNodes);
    } else {
      o.record.features = feature_vector(o.component.graph);
    }
    out.push_back(std::move(o));
  }
  if (keep) *keep = std::move(matrices);
  return out;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  if (cfg.temperaments.empty()) throw DomainError("config: no temperaments selected");
  if (cfg.kinds.empty()) throw DomainError("config: no syntony kinds selected");
  if (!(cfg.base_frequency > 0.0)) throw DomainError("config: base_frequency must be positive");
  if (cfg.octaves < 1) throw DomainError("config: octaves must be >= 1");
  validate(AnharmonicityLaw{1.0, cfg.alpha});
  validate(SyntonyWindows{cfg.delta_min, cfg.delta_max});
  if (!(cfg.cutoff > cfg.base_frequency)) throw DomainError("config: cutoff must exceed the base frequency");
  if (!(cfg.beta_start > 0.0) || !(cfg.beta_start < cfg.beta_stop))
    throw DomainError("config: need 0 < beta_start < beta_stop");
  if (!(cfg.beta_step > 0.0)) throw DomainError("config: beta_step must be positive");
  for (double b : cfg.layout_betas)
    if (!(b > 0.0)) throw DomainError("config: layout betas must be positive");
  if (!(cfg.target_mean_degree > 0.0)) throw DomainError("config: target_mean_degree must be positive");
  if (cfg.model_samples < 1) throw DomainError("config: model_samples must be >= 1");
}

std::vector<double> beta_grid(const ExperimentConfig& cfg) {
  validate(cfg);
  auto snap = [](double b) { return std::round(b * 1e9) / 1e9; };
  std::vector<double> grid;
  const auto steps = static_cast<long long>(std::floor((cfg.beta_stop - cfg.beta_start) / cfg.beta_step + 1e-9));
  for (long long k = 0; k <= steps; ++k) grid.push_back(snap(cfg.beta_start + static_cast<double>(k) * cfg.beta_step));
  if (cfg.beta_refine) {
    for (int k = 0; k <= 100; ++k) grid.push_back(snap(0.99 + k * 2e-4));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::string beta_tag(double beta) { return fmt::format("{:.6f}", beta); }

ModelCorpus build_model_corpus(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t n = kNotesPerOctave * static_cast<std::size_t>(cfg.octaves);
  const auto classes = default_model_classes();

  std::vector<ModelSpec> fitted;
  for (const auto& mc : classes)
    fitted.push_back(fit_to_degree(mc.kind, n, cfg.target_mean_degree,
                                   derive_seed(cfg.master_seed, mc.label + "-fit", 0), mc.ws_rewire_p));

  const std::size_t total = classes.size() * cfg.model_samples;
  ModelCorpus corpus;
  corpus.records.resize(total);
  corpus.batch.resize(total);
  parallel_for(total, cfg.threads, [&](std::size_t job) {
    const std::size_t c = job / cfg.model_samples, s = job % cfg.model_samples;
    ModelSpec spec = fitted[c];
    spec.seed = derive_seed(cfg.master_seed, classes[c].label, s);
    const Graph g = generate(spec);
    const auto comp = largest_component(g);
    if (comp.graph.node_count() < kMinComponentNodes)
      throw DomainError(fmt::format("{} sample {}: largest component too small", classes[c].label, s));

    auto& r = corpus.records[job];
    r.source = "model";
    r.group = classes[c].label;
    r.seed = spec.seed;
    r.sample = s;
    r.nodes = comp.graph.node_count();
    r.edges = comp.graph.edge_count();
    r.features = feature_vector(comp.graph);
    corpus.batch[job] = {classes[c].label, s, spec.seed, g.node_count(), g.edge_count()};
  });
  return corpus;
}

std::vector<SyntonetOutcome> evaluate_syntonets(const ExperimentConfig& cfg, TemperamentName temperament,
                                                double beta) {
  validate(cfg);
  return evaluate(cfg, temperament, beta, nullptr);
}

RunResult run_nonshifted(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto started = std::chrono::steady_clock::now();
  prepare_output_dir(cfg);

  OutputSet out;
  RunResult result;
  auto shared = models_and_pca(cfg, out);
  result.pca = shared.pca;
  result.models = shared.corpus.records;

  struct Job {
    std::vector<SyntonetOutcome> outcomes;
    std::optional<SyntonyMatrices> matrices;
  };
  std::vector<Job> jobs(cfg.temperaments.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    jobs[i].outcomes = evaluate(cfg, cfg.temperaments[i], 1.0, &jobs[i].matrices);
  });

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto t = cfg.temperaments[i];
    for (auto& o : jobs[i].outcomes) {
      const auto stem = "syntonets/" + file_stem(t, o.kind);
      const auto& m = o.kind == SyntonyKind::Consonance ? jobs[i].matrices->consonance : jobs[i].matrices->dissonance;
      out.add_stream(stem + "_matrix.csv", [&](std::ostream& os) { write_matrix_csv(os, m); });
      if (o.skipped) {
        result.skipped.push_back({o.record.group, o.record.kind, 1.0, *o.skipped});
        continue;
      }
      o.record.point = project2(result.pca, o.record.features);
      out.add_stream(stem + "_graph.tsv", [&](std::ostream& os) { write_edge_list(os, o.thresholded); });
      out.add_stream(stem + "_graph.graphml", [&](std::ostream& os) { write_graphml(os, o.thresholded); });
      out.add(stem + "_layout.svg",
              emit_network_svg(o.component.graph, o.component.original_ids,
                               fmt::format("{} {} (beta = 1)", o.record.group, o.record.kind)));
      result.syntonets.push_back(o.record);
    }
  }

  out.add_stream("syntonets/features.csv", [&](std::ostream& os) { write_features_csv(os, result.syntonets); });
  write_skipped(out, "syntonets/skipped.csv", result.skipped);

  std::vector<GraphRecord> all = result.models;
  all.insert(all.end(), result.syntonets.begin(), result.syntonets.end());
  out.add_stream("projection.csv", [&](std::ostream& os) { write_projection_csv(os, all); });

  for (auto kind : cfg.kinds) {
    std::vector<GraphRecord> pts = result.models;
    for (const auto& r : result.syntonets)
      if (r.kind == to_string(kind)) pts.push_back(r);
    out.add(fmt::format("plots/pca_{}.svg", to_string(kind)),
            emit_plot(pts, base_style(result.pca, fmt::format("Non-shifted partials: {}", to_string(kind)))));
  }

  result.manifest.command = "run-nonshifted";
  result.manifest.config_json = config_json(cfg).dump();
  result.manifest.files = out.commit(cfg.output_dir);
  if (cfg.record_timing)
    result.manifest.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (!cfg.output_dir.empty()) write_file(cfg.output_dir / "manifest.json", manifest_text(result.manifest));
  return result;
}

RunResult run_shifted(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto started = std::chrono::steady_clock::now();
  prepare_output_dir(cfg);

  OutputSet out;
  RunResult result;
  auto shared = models_and_pca(cfg, out);
  result.pca = shared.pca;
  result.models = shared.corpus.records;

  const auto grid = beta_grid(cfg);
  struct Job {
    TemperamentName temperament;
    double beta;
    bool layout;
    std::vector<SyntonetOutcome> outcomes;
  };
  std::vector<Job> jobs;
  for (auto t : cfg.temperaments) {
    for (double b : grid) jobs.push_back({t, b, false, {}});
    for (double b : cfg.layout_betas) jobs.push_back({t, b, true, {}});
  }
  parallel_for(jobs.size(), cfg.threads,
               [&](std::size_t i) { jobs[i].outcomes = evaluate(cfg, jobs[i].temperament, jobs[i].beta, nullptr); });

  for (auto& job : jobs) {
    for (auto& o : job.outcomes) {
      const auto stem = fmt::format("{}_b{}", file_stem(job.temperament, o.kind), beta_tag(job.beta));
      if (job.layout) {
        if (o.skipped) continue;
        out.add_stream("layouts/" + stem + ".graphml", [&](std::ostream& os) { write_graphml(os, o.thresholded); });
        out.add("layouts/" + stem + ".svg",
                emit_network_svg(o.component.graph, o.component.original_ids,
                                 fmt::format("{} {} (beta = {})", o.record.group, o.record.kind,
                                             format_number(job.beta))));
        continue;
      }
      if (o.skipped) {
        result.skipped.push_back({o.record.group, o.record.kind, job.beta, *o.skipped});
        continue;
      }
      o.record.point = project2(result.pca, o.record.features);
      out.add_stream("sweep/graphs/" + stem + ".tsv", [&](std::ostream& os) { write_edge_list(os, o.thresholded); });
      result.syntonets.push_back(o.record);
    }
  }

  out.add_stream("sweep/features.csv", [&](std::ostream& os) { write_features_csv(os, result.syntonets); });
  write_skipped(out, "sweep/skipped.csv", result.skipped);

  std::vector<GraphRecord> all = result.models;
  all.insert(all.end(), result.syntonets.begin(), result.syntonets.end());
  out.add_stream("projection.csv", [&](std::ostream& os) { write_projection_csv(os, all); });

  for (auto t : cfg.temperaments) {
    for (auto kind : cfg.kinds) {
      std::vector<GraphRecord> pts = result.models;
      for (const auto& r : result.syntonets)
        if (r.group == to_string(t) && r.kind == to_string(kind)) pts.push_back(r);
      auto style = base_style(result.pca, fmt::format("{} {} (shifted partials)", to_string(t), to_string(kind)));
      style.color_by_beta = true;
      style.beta_min = grid.front();
      style.beta_max = grid.back();
      out.add(fmt::format("plots/{}.svg", file_stem(t, kind)), emit_plot(pts, style));
    }
  }

  result.manifest.command = "run-shifted";
  result.manifest.config_json = config_json(cfg).dump();
  result.manifest.files = out.commit(cfg.output_dir);
  if (cfg.record_timing)
    result.manifest.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (!cfg.output_dir.empty()) write_file(cfg.output_dir / "manifest.json", manifest_text(result.manifest));
  return result;
}

std::vector<std::string> verify_manifest(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> problems;
  const auto manifest_path = dir / "manifest.json";
  if (!fs::exists(manifest_path)) return {"manifest.json missing"};
  const auto j = Json::parse(read_file(manifest_path));

  std::map<std::string, std::string> listed;
  for (const auto& f : j.at("files")) listed[f.at("path").get<std::string>()] = f.at("sha256").get<std::string>();

  std::map<std::string, bool> on_disk;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), dir).generic_string();
    if (rel == "manifest.json") continue;
    on_disk[rel] = true;
    auto it = listed.find(rel);
    if (it == listed.end())
      problems.push_back("unlisted file: " + rel);
    else if (sha256_hex(read_file(entry.path())) != it->second)
      problems.push_back("checksum mismatch: " + rel);
  }
  for (const auto& [path, _] : listed)
    if (!on_disk.count(path)) problems.push_back("missing file: " + path);
  return problems;
}

}  // namespace syntonet
