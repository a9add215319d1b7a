// Copyright 2026 The Speq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace speq {
namespace {

constexpr double kPlotSize = 300.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 52.0;
constexpr double kMarginBottom = 56.0;
constexpr int kTicks = 5;

constexpr const char* kEvolvedColor = "#1f77b4";
constexpr const char* kOracleColor = "#d62728";

std::string Num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string Tick(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4g", v);
  return buffer;
}

struct AxisRange {
  double lo;
  double hi;
  double Scale(double v, double pixels) const {
    return (v - lo) / (hi - lo) * pixels;
  }
};

double Coordinate(const ReportRow& row, PlotSpace space, int axis) {
  const auto& values =
      space == PlotSpace::kStrategy ? row.profile : row.payoffs;
  return values[static_cast<size_t>(axis)];
}

AxisRange RangeFor(const Report& report, PlotSpace space, int axis,
                   double channels) {
  if (space == PlotSpace::kStrategy) {
    return {0.0, channels};
  }
  double lo = 0.0;
  double hi = 1.0;
  bool first = true;
  for (const ReportRow& row : report.rows) {
    const double v = Coordinate(row, space, axis);
    if (first) {
      lo = hi = v;
      first = false;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi - lo < 1e-9) {
    lo -= 1.0;
    hi += 1.0;
  } else {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  return {lo, hi};
}

void DrawPanel(std::string& out, const Report& report, PlotSpace space,
               int axis_x, int axis_y, double origin_x, double channels) {
  const char axis_letter = space == PlotSpace::kStrategy ? 'c' : 'u';
  const AxisRange rx = RangeFor(report, space, axis_x, channels);
  const AxisRange ry = RangeFor(report, space, axis_y, channels);
  const double left = origin_x + kMarginLeft;
  const double top = kMarginTop;
  const double bottom = top + kPlotSize;

  out += "<rect x=\"" + Num(left) + "\" y=\"" + Num(top) + "\" width=\"" +
         Num(kPlotSize) + "\" height=\"" + Num(kPlotSize) +
         "\" fill=\"white\" stroke=\"#333333\"/>\n";

  for (int t = 0; t <= kTicks; ++t) {
    const double frac = static_cast<double>(t) / kTicks;
    const double x = left + frac * kPlotSize;
    const double y = bottom - frac * kPlotSize;
    const double vx = rx.lo + frac * (rx.hi - rx.lo);
    const double vy = ry.lo + frac * (ry.hi - ry.lo);
    out += "<line x1=\"" + Num(x) + "\" y1=\"" + Num(bottom) + "\" x2=\"" +
           Num(x) + "\" y2=\"" + Num(bottom + 5) +
           "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + Num(x) + "\" y=\"" + Num(bottom + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + Tick(vx) +
           "</text>\n";
    out += "<line x1=\"" + Num(left - 5) + "\" y1=\"" + Num(y) + "\" x2=\"" +
           Num(left) + "\" y2=\"" + Num(y) + "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + Num(left - 8) + "\" y=\"" + Num(y + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + Tick(vy) +
           "</text>\n";
  }

  const std::string label_x =
      std::string(1, axis_letter) + "_" + std::to_string(axis_x + 1);
  const std::string label_y =
      std::string(1, axis_letter) + "_" + std::to_string(axis_y + 1);
  out += "<text x=\"" + Num(left + kPlotSize / 2) + "\" y=\"" +
         Num(bottom + 38) + "\" font-size=\"13\" text-anchor=\"middle\">" +
         label_x + "</text>\n";
  out += "<text x=\"" + Num(left - 44) + "\" y=\"" +
         Num(top + kPlotSize / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 " +
         Num(left - 44) + " " + Num(top + kPlotSize / 2) + ")\">" + label_y +
         "</text>\n";

  for (const ReportRow& row : report.rows) {
    const double px =
        left + rx.Scale(Coordinate(row, space, axis_x), kPlotSize);
    const double py =
        bottom - ry.Scale(Coordinate(row, space, axis_y), kPlotSize);
    if (row.source == "oracle") {
      out += "<path d=\"M " + Num(px - 4) + " " + Num(py - 4) + " L " +
             Num(px + 4) + " " + Num(py + 4) + " M " + Num(px - 4) + " " +
             Num(py + 4) + " L " + Num(px + 4) + " " + Num(py - 4) +
             "\" stroke=\"" + std::string(kOracleColor) +
             "\" stroke-width=\"1.6\" fill=\"none\"/>\n";
    } else {
      out += "<circle cx=\"" + Num(px) + "\" cy=\"" + Num(py) +
             "\" r=\"3\" fill=\"" + std::string(kEvolvedColor) +
             "\" fill-opacity=\"0.75\"/>\n";
    }
  }
}

}  // namespace

PlotSpace ParsePlotSpace(const std::string& name) {
  if (name == "strategy") return PlotSpace::kStrategy;
  if (name == "payoff") return PlotSpace::kPayoff;
  throw ParseError("unknown plot space '" + name +
                   "' (expected strategy or payoff)");
}

std::string RenderSvg(const Report& report, PlotSpace space) {
  const int players = ReportPlayers(report);
  if (players < 2 || players > 3) {
    throw Unsupported("plots cover 2- and 3-player games only; consume "
                      "report.csv for other sizes");
  }
  const double channels = report.scenario.contains("game")
                              ? report.scenario["game"].value("w", 10.0)
                              : 10.0;

  std::vector<std::pair<int, int>> panels;
  if (players == 2) {
    panels = {{0, 1}};
  } else {
    panels = {{0, 1}, {0, 2}, {1, 2}};
  }
  const double panel_stride = kMarginLeft + kPlotSize + kMarginRight;
  const double width = panel_stride * panels.size();
  const double height = kMarginTop + kPlotSize + kMarginBottom;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(width) +
         "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " + Num(width) +
         " " + Num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const std::string title =
      std::string(space == PlotSpace::kStrategy ? "strategy space"
                                                : "payoff space") +
      (report.scenario.contains("rationality")
           ? " | rationality " +
                 report.scenario["rationality"].get<std::string>()
           : "");
  out += "<text x=\"12\" y=\"20\" font-size=\"14\" font-family=\"sans-serif\">" +
         title + "</text>\n";

  bool has_oracle = false;
  bool has_evolved = false;
  for (const ReportRow& row : report.rows) {
    (row.source == "oracle" ? has_oracle : has_evolved) = true;
  }
  double legend_x = width - 16;
  if (has_oracle) {
    out += "<text x=\"" + Num(legend_x) +
           "\" y=\"20\" font-size=\"12\" text-anchor=\"end\" fill=\"" +
           std::string(kOracleColor) + "\">x oracle</text>\n";
    legend_x -= 70;
  }
  if (has_evolved) {
    out += "<text x=\"" + Num(legend_x) +
           "\" y=\"20\" font-size=\"12\" text-anchor=\"end\" fill=\"" +
           std::string(kEvolvedColor) + "\">o evolved</text>\n";
  }

  out += "<g font-family=\"sans-serif\">\n";
  for (size_t p = 0; p < panels.size(); ++p) {
    DrawPanel(out, report, space, panels[p].first, panels[p].second,
              panel_stride * static_cast<double>(p), channels);
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace speq
