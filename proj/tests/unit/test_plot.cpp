#include <gtest/gtest.h>

#include <regex>

#include "generators.hpp"
#include "syntonet/errors.hpp"
#include "syntonet/plot.hpp"

using namespace syntonet;

namespace {
std::vector<GraphRecord> points() {
  std::vector<GraphRecord> out;
  for (int i = 0; i < 6; ++i) {
    GraphRecord r;
    r.source = "model";
    r.group = i % 2 ? "BA" : "GEO";
    r.point = {0.5 * i - 1.2345678, 0.25 * i * i};
    out.push_back(r);
  }
  GraphRecord s;
  s.source = "syntonet";
  s.group = "Equal";
  s.kind = "consonance";
  s.beta = 1.1;
  s.point = {-3.3333333, 2.7182818};
  out.push_back(s);
  return out;
}
}  // namespace

TEST(Plot, DeterministicBytes) {
  PlotStyle style;
  style.title = "test";
  EXPECT_EQ(emit_plot(points(), style), emit_plot(points(), style));
}

TEST(Plot, CoordinatesParseBack) {
  const auto pts = points();
  const auto svg = emit_plot(pts, PlotStyle{});
  const std::regex marker("data-pc1=\"([-0-9.]+)\" data-pc2=\"([-0-9.]+)\"");
  std::vector<std::pair<double, double>> found;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), marker); it != std::sregex_iterator(); ++it)
    found.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
  ASSERT_EQ(found.size(), pts.size());
  // markers are drawn models first, then syntonets, each in input order
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_NEAR(found[i].first, pts[i].point.pc1, 1e-3);
    EXPECT_NEAR(found[i].second, pts[i].point.pc2, 1e-3);
  }
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n') > 10, true);
  EXPECT_NE(svg.find("class=\"syntonet\""), std::string::npos);
}

TEST(Plot, BetaColouring) {
  PlotStyle style;
  style.color_by_beta = true;
  const auto svg = emit_plot(points(), style);
  EXPECT_NE(svg.find(">beta</text>"), std::string::npos);
}

TEST(Plot, EmptyInputRejected) { EXPECT_THROW(emit_plot({}, PlotStyle{}), DomainError); }

TEST(Plot, NetworkSvg) {
  const auto g = testkit::cycle_graph(12);
  std::vector<NodeId> ids(12);
  for (NodeId v = 0; v < 12; ++v) ids[v] = v * 3;
  const auto svg = emit_network_svg(g, ids, "ring");
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n'), 3 + 12 + 12 + 1);
  EXPECT_THROW(emit_network_svg(g, {0, 1}, "bad"), DomainError);
}
