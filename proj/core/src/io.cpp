#include "syntonet/io.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <istream>
#include <openssl/evp.h>
#include <ostream>
#include <sstream>

#include "syntonet/errors.hpp"

namespace syntonet {

namespace {

constexpr std::string_view kRecordColumns = "source,group,kind,beta,seed,sample";

double parse_double(const std::string& s, std::string_view what) {
  double x = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, x);
  if (ec != std::errc() || ptr != end) throw DomainError(fmt::format("cannot parse {} from '{}'", what, s));
  return x;
}

template <class Int>
Int parse_int(const std::string& s, std::string_view what) {
  Int x{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, x);
  if (ec != std::errc() || ptr != end) throw DomainError(fmt::format("cannot parse {} from '{}'", what, s));
  return x;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_record_prefix(std::ostream& os, const GraphRecord& r) {
  os << r.source << ',' << r.group << ',' << r.kind << ',' << (r.beta ? format_number(*r.beta) : "") << ','
     << r.seed << ',' << r.sample;
}

GraphRecord parse_record_prefix(const std::vector<std::string>& f) {
  GraphRecord r;
  r.source = f[0];
  r.group = f[1];
  r.kind = f[2];
  if (!f[3].empty()) r.beta = parse_double(f[3], "beta");
  r.seed = parse_int<std::uint64_t>(f[4], "seed");
  r.sample = parse_int<std::size_t>(f[5], "sample");
  return r;
}

std::vector<std::vector<std::string>> read_rows(std::istream& is, std::size_t min_columns, std::string_view what) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto f = split_csv_line(line);
    if (f.size() < min_columns)
      throw DomainError(fmt::format("{}: expected {} columns, got {}", what, min_columns, f.size()));
    rows.push_back(std::move(f));
  }
  return rows;
}

}  // namespace

std::string format_number(double x) { return fmt::format("{}", x); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

void write_temperaments_csv(std::ostream& os, double base_frequency) {
  os << "temperament,index,ratio,frequency\n";
  for (auto t : kAllTemperaments) {
    const auto table = temperament_table(t);
    for (std::size_t i = 0; i < kNotesPerOctave; ++i) {
      os << to_string(t) << ',' << i + 1 << ',' << format_number(table.ratios[i]) << ','
         << format_number(base_frequency * table.ratios[i]) << '\n';
    }
  }
}

void write_spectrum_csv_header(std::ostream& os) { os << "note,n,frequency,amplitude\n"; }

void write_spectrum_csv_rows(std::ostream& os, const std::string& label, const PartialSpectrum& s) {
  for (std::size_t k = 0; k < s.partials.size(); ++k)
    os << label << ',' << k + 1 << ',' << format_number(s.partials[k].frequency) << ','
       << format_number(s.partials[k].amplitude) << '\n';
}

void write_matrix_csv(std::ostream& os, const SyntonyMatrix& m) {
  auto label = [&](std::size_t i) { return m.labels().empty() ? std::to_string(i) : m.labels()[i]; };
  os << "note";
  for (std::size_t j = 0; j < m.size(); ++j) os << ',' << label(j);
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << label(i);
    for (std::size_t j = 0; j < m.size(); ++j) os << ',' << format_number(m(i, j));
    os << '\n';
  }
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << "# nodes=" << g.node_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << '\t' << e.v << '\t' << format_number(e.weight) << '\n';
}

Graph read_edge_list(std::istream& is) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_id = 0;
  bool weighted = false;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# nodes=", 0) == 0) declared = parse_int<std::size_t>(line.substr(8), "node count");
      continue;
    }
    std::istringstream ls(line);
    std::size_t u = 0, v = 0;
    double w = 1.0;
    if (!(ls >> u >> v)) throw DomainError(fmt::format("edge list: malformed line '{}'", line));
    if (!(ls >> w)) w = 1.0;
    if (w != 1.0) weighted = true;
    edges.push_back({u, v, w});
    max_id = std::max({max_id, u, v});
  }
  const std::size_t n = declared ? *declared : (edges.empty() ? 0 : max_id + 1);
  return Graph(n, std::move(edges), weighted);
}

void write_graphml(std::ostream& os, const Graph& g) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
     << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
     << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (NodeId v = 0; v < g.node_count(); ++v)
    os << "    <node id=\"n" << v << "\"><data key=\"label\">" << xml_escape(g.label(v)) << "</data></node>\n";
  for (const auto& e : g.edges())
    os << "    <edge source=\"n" << e.u << "\" target=\"n" << e.v << "\"><data key=\"weight\">"
       << format_number(e.weight) << "</data></edge>\n";
  os << "  </graph>\n</graphml>\n";
}

void write_features_csv(std::ostream& os, const std::vector<GraphRecord>& records) {
  os << kRecordColumns << ",nodes,edges";
  for (const auto& name : feature_names()) os << ',' << name;
  os << '\n';
  for (const auto& r : records) {
    write_record_prefix(os, r);
    os << ',' << r.nodes << ',' << r.edges;
    for (double x : r.features.values) os << ',' << format_number(x);
    os << '\n';
  }
}

std::vector<GraphRecord> read_features_csv(std::istream& is) {
  std::vector<GraphRecord> out;
  for (const auto& f : read_rows(is, 8 + kFeatureCount, "features csv")) {
    auto r = parse_record_prefix(f);
    r.nodes = parse_int<std::size_t>(f[6], "nodes");
    r.edges = parse_int<std::size_t>(f[7], "edges");
    for (std::size_t k = 0; k < kFeatureCount; ++k) r.features.values[k] = parse_double(f[8 + k], "feature");
    out.push_back(std::move(r));
  }
  return out;
}

void write_pca_csv(std::ostream& os, const PcaModel& m, const std::vector<std::string>& names) {
  os << "row,eigenvalue,explained_variance_ratio";
  for (std::size_t j = 0; j < m.input_dim; ++j) os << ',' << (j < names.size() ? names[j] : std::to_string(j));
  os << '\n';
  os << "mean,,";
  for (double x : m.means) os << ',' << format_number(x);
  os << "\nstd,,";
  for (double x : m.stds) os << ',' << format_number(x);
  os << '\n';
  for (std::size_t c = 0; c < m.components.size(); ++c) {
    std::vector<double> full(m.input_dim, 0.0);
    for (std::size_t a = 0; a < m.kept.size(); ++a) full[m.kept[a]] = m.components[c][a];
    os << "pc" << c + 1 << ',' << format_number(m.eigenvalues[c]) << ','
       << format_number(m.explained_variance_ratio[c]);
    for (double x : full) os << ',' << format_number(x);
    os << '\n';
  }
}

void write_projection_csv(std::ostream& os, const std::vector<GraphRecord>& records) {
  os << kRecordColumns << ",pc1,pc2\n";
  for (const auto& r : records) {
    write_record_prefix(os, r);
    os << ',' << format_number(r.point.pc1) << ',' << format_number(r.point.pc2) << '\n';
  }
}

std::vector<GraphRecord> read_projection_csv(std::istream& is) {
  std::vector<GraphRecord> out;
  for (const auto& f : read_rows(is, 8, "projection csv")) {
    auto r = parse_record_prefix(f);
    r.point = {parse_double(f[6], "pc1"), parse_double(f[7], "pc2")};
    out.push_back(std::move(r));
  }
  return out;
}

void write_batch_manifest_csv(std::ostream& os, const std::vector<BatchEntry>& entries) {
  os << "model,sample,seed,n,edges\n";
  for (const auto& e : entries) os << e.model << ',' << e.sample << ',' << e.seed << ',' << e.nodes << ',' << e.edges << '\n';
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string out;
  for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", digest[i]);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open {}", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  out << bytes;
  if (!out) throw std::runtime_error(fmt::format("write failed for {}", path.string()));
}

}  // namespace syntonet
