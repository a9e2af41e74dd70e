#include "syntonet/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <map>
#include <numbers>

#include "syntonet/errors.hpp"
#include "syntonet/scale.hpp"

namespace syntonet {

namespace {

constexpr std::array<std::string_view, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

// piecewise-linear viridis approximation, t in [0, 1]
std::string ramp(double t) {
  static constexpr std::array<std::array<double, 3>, 5> stops = {{{68, 1, 84},
                                                                  {59, 82, 139},
                                                                  {33, 145, 140},
                                                                  {94, 201, 98},
                                                                  {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * static_cast<double>(stops.size() - 1);
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(k);
  std::array<int, 3> rgb{};
  for (int c = 0; c < 3; ++c)
    rgb[c] = static_cast<int>(std::lround(stops[k][c] + f * (stops[k + 1][c] - stops[k][c])));
  return fmt::format("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2]);
}

}  // namespace

std::string emit_plot(const std::vector<GraphRecord>& points, const PlotStyle& style) {
  if (points.empty()) throw DomainError("emit_plot: nothing to draw");

  const double left = 70, right = 190, top = 50, bottom = 60;
  const double pw = style.width - left - right, ph = style.height - top - bottom;

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& p : points) {
    xmin = std::min(xmin, p.point.pc1);
    xmax = std::max(xmax, p.point.pc1);
    ymin = std::min(ymin, p.point.pc2);
    ymax = std::max(ymax, p.point.pc2);
  }
  auto pad = [](double& lo, double& hi) {
    const double span = hi - lo;
    const double m = span > 0 ? 0.05 * span : 1.0;
    lo -= m;
    hi += m;
  };
  pad(xmin, xmax);
  pad(ymin, ymax);
  auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  // stable group -> colour assignment in order of first appearance
  std::vector<std::string> model_groups, syntonet_groups;
  for (const auto& p : points) {
    auto& list = p.source == "model" ? model_groups : syntonet_groups;
    const std::string key = p.source == "model" ? p.group : p.group + (p.kind.empty() ? "" : " " + p.kind);
    if (std::find(list.begin(), list.end(), key) == list.end()) list.push_back(key);
  }
  std::map<std::string, std::string> colour;
  std::size_t next = 0;
  for (const auto& g : model_groups) colour["m:" + g] = std::string(kPalette[next++ % kPalette.size()]);
  for (const auto& g : syntonet_groups) colour["s:" + g] = std::string(kPalette[next++ % kPalette.size()]);

  std::string svg;
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      style.width, style.height, style.width, style.height);
  svg += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", style.width, style.height);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"28\" font-size=\"15\" text-anchor=\"middle\">{}</text>\n",
                     left + pw / 2, esc(style.title));
  svg += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" "
                     "stroke=\"#444\"/>\n",
                     left, top, pw, ph);
  for (int t = 0; t <= 4; ++t) {
    const double fx = xmin + (xmax - xmin) * t / 4.0, fy = ymin + (ymax - ymin) * t / 4.0;
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\" fill=\"#444\">{:.2f}</text>\n",
                       sx(fx), top + ph + 16, fx);
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\" fill=\"#444\">{:.2f}</text>\n",
                       left - 6, sy(fy) + 4, fy);
  }
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", left + pw / 2,
                     top + ph + 40, esc(style.x_label));
  svg += fmt::format(
      "<text x=\"18\" y=\"{:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.1f})\">{}</text>\n",
      top + ph / 2, top + ph / 2, esc(style.y_label));

  // models first so syntonets are drawn on top
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& p : points) {
      const bool model = p.source == "model";
      if (model != (pass == 0)) continue;
      const double x = sx(p.point.pc1), y = sy(p.point.pc2);
      const std::string data = fmt::format("data-pc1=\"{:.6f}\" data-pc2=\"{:.6f}\"", p.point.pc1, p.point.pc2);
      if (model) {
        svg += fmt::format("<circle class=\"model\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\" "
                           "fill-opacity=\"0.55\" {}/>\n",
                           x, y, colour["m:" + p.group], data);
      } else {
        const std::string key = p.group + (p.kind.empty() ? "" : " " + p.kind);
        const std::string fill =
            style.color_by_beta && p.beta
                ? ramp((*p.beta - style.beta_min) / std::max(1e-12, style.beta_max - style.beta_min))
                : colour["s:" + key];
        svg += fmt::format("<rect class=\"syntonet\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"8\" height=\"8\" "
                           "fill=\"{}\" stroke=\"black\" stroke-width=\"0.6\" {}/>\n",
                           x - 4, y - 4, fill, data);
      }
    }
  }

  // legend
  double ly = top + 10;
  const double lx = left + pw + 20;
  svg += fmt::format("<g class=\"legend\">\n");
  for (const auto& g : model_groups) {
    svg += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"4\" fill=\"{}\"/><text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n",
                       lx, ly, colour["m:" + g], lx + 10, ly + 4, esc(g));
    ly += 18;
  }
  if (!style.color_by_beta) {
    for (const auto& g : syntonet_groups) {
      svg += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"8\" height=\"8\" fill=\"{}\" stroke=\"black\" "
                         "stroke-width=\"0.6\"/><text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n",
                         lx - 4, ly - 4, colour["s:" + g], lx + 10, ly + 4, esc(g));
      ly += 18;
    }
  } else if (!syntonet_groups.empty()) {
    ly += 6;
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">beta</text>\n", lx - 4, ly);
    ly += 8;
    const int steps = 20;
    for (int s = 0; s < steps; ++s) {
      const double t = 1.0 - static_cast<double>(s) / (steps - 1);
      svg += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"14\" height=\"7\" fill=\"{}\"/>\n", lx - 4,
                         ly + s * 7.0, ramp(t));
    }
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", lx + 16, ly + 8,
                       format_number(style.beta_max));
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", lx + 16, ly + steps * 7.0,
                       format_number(style.beta_min));
    ly += steps * 7.0 + 14;
    svg += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"8\" height=\"8\" fill=\"#888\" stroke=\"black\" "
                       "stroke-width=\"0.6\"/><text x=\"{:.1f}\" y=\"{:.1f}\">syntonet</text>\n",
                       lx - 4, ly - 4, lx + 10, ly + 4);
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string emit_network_svg(const Graph& g, const std::vector<NodeId>& original_ids, const std::string& title) {
  if (original_ids.size() != g.node_count()) throw DomainError("emit_network_svg: id map size mismatch");
  const int size = 640;
  const double cx = size / 2.0, cy = size / 2.0 + 10;
  std::size_t max_octave = 0;
  for (NodeId id : original_ids) max_octave = std::max(max_octave, id / kNotesPerOctave);
  const double r0 = 40.0, dr = (size / 2.0 - 60.0 - r0) / std::max<double>(1.0, static_cast<double>(max_octave));

  std::vector<std::pair<double, double>> pos(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto id = original_ids[v];
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(id % kNotesPerOctave) / 12.0 -
                         std::numbers::pi / 2.0;
    const double r = r0 + dr * static_cast<double>(id / kNotesPerOctave);
    pos[v] = {cx + r * std::cos(angle), cy + r * std::sin(angle)};
  }

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\" "
      "font-family=\"sans-serif\" font-size=\"9\">\n<rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n"
      "<text x=\"{1:.1f}\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">{2}</text>\n",
      size, cx, esc(title));
  for (const auto& e : g.edges())
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#555\" "
                       "stroke-opacity=\"0.35\" stroke-width=\"0.8\"/>\n",
                       pos[e.u].first, pos[e.u].second, pos[e.v].first, pos[e.v].second);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto pc = original_ids[v] % kNotesPerOctave;
    svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" fill=\"{}\"><title>{}</title></circle>\n",
                       pos[v].first, pos[v].second, ramp(static_cast<double>(pc) / 11.0), esc(g.label(v)));
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace syntonet
