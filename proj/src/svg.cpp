// Copyright 2026 The Coopetition Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coopetition/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace coopetition {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 0.05;  // of the viewport, each side

struct Frame {
  double x0, x1, y0, y1;  // data bounds

  double px(double x) const {
    const double t = (x - x0) / (x1 - x0);
    return kMargin * kWidth + t * (1.0 - 2.0 * kMargin) * kWidth;
  }
  double py(double y) const {
    const double t = (y - y0) / (y1 - y0);
    return kHeight - (kMargin * kHeight + t * (1.0 - 2.0 * kMargin) * kHeight);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void escape_xml(const std::string& s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
}

std::string points_attr(const std::vector<PayoffPoint>& pts, const Frame& f) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    out += num(f.px(pts[i].p1)) + "," + num(f.py(pts[i].p2));
  }
  return out;
}

void add_line(std::string& svg, const Frame& f, const std::string& id,
              const Segment& s, const std::string& stroke,
              const std::string& extra = "") {
  svg += "  <line id=\"" + id + "\" x1=\"" + num(f.px(s.a.p1)) + "\" y1=\"" +
         num(f.py(s.a.p2)) + "\" x2=\"" + num(f.px(s.b.p1)) + "\" y2=\"" +
         num(f.py(s.b.p2)) + "\" stroke=\"" + stroke + "\"" + extra + " />\n";
}

void add_marker(std::string& svg, const Frame& f, const PayoffPoint& p,
                const std::string& label, const std::string& fill) {
  svg += "  <circle cx=\"" + num(f.px(p.p1)) + "\" cy=\"" + num(f.py(p.p2)) +
         "\" r=\"4\" fill=\"" + fill + "\" />\n";
  std::string text;
  escape_xml(label, text);
  svg += "  <text x=\"" + num(f.px(p.p1) + 7.0) + "\" y=\"" +
         num(f.py(p.p2) - 7.0) + "\" font-size=\"15\" font-family=\"sans-serif\">" +
         text + "</text>\n";
}

}  // namespace

std::string render_svg(const CoopetitiveAnalysis& analysis,
                       const std::string& title) {
  std::vector<PayoffPoint> bbox_points = analysis.region.hull.vertices;
  const auto& initial = analysis.initial_region.hull.vertices;
  bbox_points.insert(bbox_points.end(), initial.begin(), initial.end());
  if (analysis.rebalancing) {
    const RebalancingTrace& r = *analysis.rebalancing;
    bbox_points.push_back(r.tu_portion.a);
    bbox_points.push_back(r.tu_portion.b);
    bbox_points.push_back(r.compromise_segment.a);
    bbox_points.push_back(r.compromise_segment.b);
    bbox_points.push_back(r.compromise);
  }
  OrderInterval box = extrema(bbox_points);
  if (box.hi.p1 - box.lo.p1 < 1e-9) {
    box.lo.p1 -= 0.5;
    box.hi.p1 += 0.5;
  }
  if (box.hi.p2 - box.lo.p2 < 1e-9) {
    box.lo.p2 -= 0.5;
    box.hi.p2 += 0.5;
  }
  const Frame frame{box.lo.p1, box.hi.p1, box.lo.p2, box.hi.p2};

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n";

  std::string safe_title;
  escape_xml(title, safe_title);
  svg += "  <title>" + safe_title + "</title>\n";
  svg += "  <text x=\"20\" y=\"24\" font-size=\"17\" "
         "font-family=\"sans-serif\">" + safe_title + "</text>\n";

  svg += "  <polygon id=\"payoff-region\" points=\"" +
         points_attr(analysis.region.hull.vertices, frame) +
         "\" fill=\"#dbeafe\" stroke=\"#1d4ed8\" stroke-width=\"1.5\" />\n";
  svg += "  <polygon id=\"initial-region\" points=\"" +
         points_attr(initial, frame) +
         "\" fill=\"#fee2e2\" fill-opacity=\"0.7\" stroke=\"#b91c1c\" "
         "stroke-width=\"1\" stroke-dasharray=\"5,3\" />\n";

  // TU line clipped to the data frame.
  {
    const double vmax = analysis.tu.vmax;
    const double lo1 = std::max(frame.x0, vmax - frame.y1);
    const double hi1 = std::min(frame.x1, vmax - frame.y0);
    if (lo1 <= hi1)
      add_line(svg, frame, "tu-line", Segment{{lo1, vmax - lo1}, {hi1, vmax - hi1}},
               "#047857", " stroke-width=\"1.5\" stroke-dasharray=\"8,4\"");
  }

  if (analysis.rebalancing) {
    const RebalancingTrace& r = *analysis.rebalancing;
    add_line(svg, frame, "segment-s", r.tu_portion, "#7c3aed",
             " stroke-width=\"2\"");
    add_line(svg, frame, "segment-s-prime", r.compromise_segment, "#d97706",
             " stroke-width=\"2\"");
  }

  svg += "  <polyline id=\"pareto-front\" points=\"" +
         points_attr(analysis.region.front.points, frame) +
         "\" fill=\"none\" stroke=\"#111827\" stroke-width=\"3\" />\n";

  const auto& front = analysis.region.front.points;
  if (!front.empty()) {
    add_marker(svg, frame, front.back(), "P'", "#111827");
    if (front.size() > 1) add_marker(svg, frame, front.front(), "Q'", "#111827");
  }
  if (analysis.rebalancing) {
    add_marker(svg, frame, analysis.rebalancing->threat, "a", "#b91c1c");
    add_marker(svg, frame, analysis.rebalancing->compromise, "K", "#7c3aed");
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace coopetition
