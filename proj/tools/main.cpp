// syntonet: build and analyse consonance/dissonance networks of tempered scales.
#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "syntonet/errors.hpp"
#include "syntonet/io.hpp"
#include "syntonet/pipeline.hpp"
#include "syntonet/plot.hpp"

using namespace syntonet;

namespace {

struct Options {
  std::vector<std::string> temperaments;
  std::vector<std::string> kinds;
  double beta = 1.0;
  std::string format = "tsv";
  std::string input;
  std::string out;
  std::string title;
  bool component = false;
  bool color_by_beta = false;
};

// stdout when no path is given
void emit(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-")
    std::cout << bytes;
  else
    write_file(path, bytes);
}

template <class Writer>
std::string render(Writer&& w) {
  std::ostringstream os;
  w(os);
  return os.str();
}

TemperamentName one_temperament(const ExperimentConfig& cfg) {
  if (cfg.temperaments.size() != 1) throw DomainError("exactly one --temperament is required here");
  return cfg.temperaments.front();
}

SyntonyKind one_kind(const ExperimentConfig& cfg) {
  if (cfg.kinds.size() != 1) throw DomainError("exactly one --kind is required here");
  return cfg.kinds.front();
}

void resolve(const Options& opt, ExperimentConfig& cfg) {
  if (!opt.temperaments.empty()) {
    cfg.temperaments.clear();
    for (const auto& t : opt.temperaments) {
      auto parsed = parse_temperament(t);
      if (!parsed) throw DomainError(fmt::format("unknown temperament '{}'", t));
      cfg.temperaments.push_back(*parsed);
    }
  }
  if (!opt.kinds.empty()) {
    cfg.kinds.clear();
    for (const auto& k : opt.kinds) {
      if (k == "consonance")
        cfg.kinds.push_back(SyntonyKind::Consonance);
      else if (k == "dissonance")
        cfg.kinds.push_back(SyntonyKind::Dissonance);
      else
        throw DomainError(fmt::format("unknown kind '{}' (consonance|dissonance)", k));
    }
  }
}

Scale scale_of(const ExperimentConfig& cfg, TemperamentName t) {
  return build_scale(temperament_table(t), cfg.base_frequency, cfg.octaves);
}

void print_run(const RunResult& r, const ExperimentConfig& cfg) {
  std::cerr << fmt::format("{}: {} model graphs, {} syntonets, {} skipped, {} files in {}\n", r.manifest.command,
                           r.models.size(), r.syntonets.size(), r.skipped.size(), r.manifest.files.size(),
                           cfg.output_dir.empty() ? "(none)" : cfg.output_dir.string());
  if (!r.pca.explained_variance_ratio.empty())
    std::cerr << fmt::format("PC1 {:.2f}%  PC2 {:.2f}%\n", 100 * r.pca.explained_variance_ratio[0],
                             100 * r.pca.explained_variance_ratio.at(1));
  for (const auto& w : r.pca.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& s : r.skipped)
    std::cerr << fmt::format("skipped {} {} beta={}: {}\n", s.temperament, s.kind, format_number(s.beta), s.reason);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consonance and dissonance networks of musical scales"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_config("--config", "", "flat key = value file; command-line flags take precedence");
  app.require_subcommand(1);

  ExperimentConfig cfg;
  Options opt;
  std::string out_dir;

  app.add_option("--temperament", opt.temperaments, "Equal, Just, Meantone, Pythagorean, Werckmeister")
      ->delimiter(',');
  app.add_option("--kind", opt.kinds, "consonance or dissonance")->delimiter(',');
  app.add_option("--beta", opt.beta, "anharmonicity exponent of the partials")->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "amplitude decay rate")->capture_default_str();
  app.add_option("--delta-min", cfg.delta_min, "consonance window (Hz)")->capture_default_str();
  app.add_option("--delta-max", cfg.delta_max, "dissonance window upper bound (Hz)")->capture_default_str();
  app.add_option("--octaves", cfg.octaves)->capture_default_str();
  app.add_option("--base", cfg.base_frequency, "frequency of the lowest C (Hz)")->capture_default_str();
  app.add_option("--cutoff", cfg.cutoff, "highest audible partial (Hz)")->capture_default_str();
  app.add_option("--mean-degree", cfg.target_mean_degree)->capture_default_str();
  app.add_option("--samples", cfg.model_samples, "graphs per model class")->capture_default_str();
  app.add_option("--seed", cfg.master_seed)->capture_default_str();
  app.add_option("--beta-start", cfg.beta_start)->capture_default_str();
  app.add_option("--beta-stop", cfg.beta_stop)->capture_default_str();
  app.add_option("--beta-step", cfg.beta_step)->capture_default_str();
  app.add_flag("--beta-refine", cfg.beta_refine, "add a fine sweep around beta = 1");
  app.add_option("--layout-betas", cfg.layout_betas)->delimiter(',');
  app.add_option("--threads", cfg.threads, "0 = all cores")->capture_default_str();
  app.add_option("--out", opt.out, "output file (default stdout)");
  app.add_option("--out-dir", out_dir, "run directory");
  app.add_flag("--overwrite", cfg.overwrite, "replace a previous run in --out-dir");
  app.add_flag("--timing", cfg.record_timing, "record wall-clock time in the manifest");
  app.add_option("--input", opt.input, "input file");
  app.add_option("--format", opt.format, "graph output: tsv or graphml")->check(CLI::IsMember({"tsv", "graphml"}));
  app.add_flag("--component", opt.component, "keep only the largest connected component");
  app.add_option("--title", opt.title);
  app.add_flag("--color-by-beta", opt.color_by_beta);

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help)->fallthrough(); };
  auto* temperaments = sub("temperaments", "frequency ratio table of every temperament");
  auto* spectrum = sub("spectrum", "partials of every note of a scale");
  auto* matrix = sub("matrix", "consonance or dissonance matrix");
  auto* graph = sub("graph", "thresholded syntonet");
  auto* models = sub("models", "reference model corpus with features");
  auto* features = sub("features", "34 features of an edge-list graph");
  auto* pca = sub("pca", "principal components of a features table");
  auto* nonshifted = sub("run-nonshifted", "full experiment with harmonic partials");
  auto* shifted = sub("run-shifted", "full experiment over the beta sweep");
  auto* plot = sub("plot", "scatter plot of a projection table");

  CLI11_PARSE(app, argc, argv);

  try {
    resolve(opt, cfg);
    cfg.output_dir = out_dir;

    if (*temperaments) {
      emit(opt.out, render([&](std::ostream& os) { write_temperaments_csv(os, cfg.base_frequency); }));
    } else if (*spectrum) {
      const AnharmonicityLaw law{opt.beta, cfg.alpha};
      emit(opt.out, render([&](std::ostream& os) {
             write_spectrum_csv_header(os);
             const auto scale = scale_of(cfg, one_temperament(cfg));
             const auto spectra = build_spectra(scale, law, cfg.cutoff);
             for (std::size_t i = 0; i < spectra.size(); ++i) write_spectrum_csv_rows(os, scale.notes[i].label, spectra[i]);
           }));
    } else if (*matrix || *graph) {
      const auto scale = scale_of(cfg, one_temperament(cfg));
      const auto kind = one_kind(cfg);
      const auto m = build_syntony_matrix(scale, AnharmonicityLaw{opt.beta, cfg.alpha},
                                          SyntonyWindows{cfg.delta_min, cfg.delta_max}, kind, cfg.cutoff);
      if (*matrix) {
        emit(opt.out, render([&](std::ostream& os) { write_matrix_csv(os, m); }));
      } else {
        Graph g = threshold_graph(m, target_edge_count(cfg.target_mean_degree, scale.notes.size()));
        if (opt.component) g = largest_component(g).graph;
        emit(opt.out, render([&](std::ostream& os) {
               if (opt.format == "graphml")
                 write_graphml(os, g);
               else
                 write_edge_list(os, g);
             }));
        std::cerr << fmt::format("{} nodes, {} edges, mean degree {:.4f}\n", g.node_count(), g.edge_count(),
                                 g.mean_degree());
      }
    } else if (*models) {
      auto corpus = build_model_corpus(cfg);
      if (!out_dir.empty()) {
        write_file(std::filesystem::path(out_dir) / "batch.csv",
                   render([&](std::ostream& os) { write_batch_manifest_csv(os, corpus.batch); }));
        write_file(std::filesystem::path(out_dir) / "features.csv",
                   render([&](std::ostream& os) { write_features_csv(os, corpus.records); }));
      } else {
        emit(opt.out, render([&](std::ostream& os) { write_features_csv(os, corpus.records); }));
      }
    } else if (*features) {
      if (opt.input.empty()) throw DomainError("features needs --input <edge list>");
      std::ifstream in(opt.input);
      if (!in) throw std::runtime_error("cannot open " + opt.input);
      const auto comp = largest_component(read_edge_list(in));
      GraphRecord r;
      r.source = "file";
      r.group = std::filesystem::path(opt.input).filename().string();
      r.nodes = comp.graph.node_count();
      r.edges = comp.graph.edge_count();
      r.features = feature_vector(comp.graph);
      emit(opt.out, render([&](std::ostream& os) { write_features_csv(os, {r}); }));
    } else if (*pca) {
      if (opt.input.empty()) throw DomainError("pca needs --input <features csv>");
      std::ifstream in(opt.input);
      if (!in) throw std::runtime_error("cannot open " + opt.input);
      std::vector<FeatureVector> rows;
      for (const auto& r : read_features_csv(in)) rows.push_back(r.features);
      const auto model = fit_pca(rows);
      for (const auto& w : model.warnings) std::cerr << "warning: " << w << '\n';
      emit(opt.out, render([&](std::ostream& os) { write_pca_csv(os, model, feature_names()); }));
    } else if (*nonshifted) {
      print_run(run_nonshifted(cfg), cfg);
    } else if (*shifted) {
      print_run(run_shifted(cfg), cfg);
    } else if (*plot) {
      if (opt.input.empty()) throw DomainError("plot needs --input <projection csv>");
      std::ifstream in(opt.input);
      if (!in) throw std::runtime_error("cannot open " + opt.input);
      PlotStyle style;
      style.title = opt.title;
      style.x_label = "PC1";
      style.y_label = "PC2";
      style.color_by_beta = opt.color_by_beta;
      const auto points = read_projection_csv(in);
      if (opt.color_by_beta) {
        bool first = true;
        for (const auto& p : points) {
          if (!p.beta) continue;
          style.beta_min = first ? *p.beta : std::min(style.beta_min, *p.beta);
          style.beta_max = first ? *p.beta : std::max(style.beta_max, *p.beta);
          first = false;
        }
      }
      emit(opt.out, emit_plot(points, style));
    }
  } catch (const std::exception& e) {
    std::cerr << "syntonet: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
