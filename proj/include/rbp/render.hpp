#pragma once

// SVG 1.1 drawings of an instance and an edge set.

#include <algorithm>
#include <cstdio>
#include <string>

#include "rbp/core.hpp"

namespace rbp {

struct RenderStyle {
  /// Fraction of the larger bounding-box side added on every border.
  double margin = 0.05;
  /// Point radius and base stroke width, relative to the larger side.
  double point_radius = 0.012;
  double stroke_width = 0.004;
  double pixels = 800.0;
};

inline const char* svg_color(Color c) {
  switch (c) {
    case Color::Red: return "#d62728";
    case Color::Blue: return "#1f77b4";
    case Color::Purple: return "#8e44ad";
  }
  return "#000000";
}

inline const char* svg_color(EdgeClass c) {
  switch (c) {
    case EdgeClass::Red: return svg_color(Color::Red);
    case EdgeClass::Blue: return svg_color(Color::Blue);
    case EdgeClass::Purple: return svg_color(Color::Purple);
    case EdgeClass::Invalid: return "#7f7f7f";
  }
  return "#000000";
}

/// Edges first, points on top. The y axis points up.
inline std::string render_svg(const Instance& inst, const EdgeSet& edges, const RenderStyle& style = {}) {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  if (inst.size() > 0) {
    x0 = x1 = inst.pos(0).x;
    y0 = y1 = inst.pos(0).y;
  }
  for (const auto& p : inst.points()) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  double side = std::max(x1 - x0, y1 - y0);
  if (!(side > 0)) side = 1.0;
  const double pad = style.margin * side;
  const double w = x1 - x0 + 2 * pad;
  const double h = y1 - y0 + 2 * pad;
  const double scale = style.pixels / std::max(w, h);

  std::string out;
  char buf[256];
  auto emit = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out += buf;
  };
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  emit("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" height=\"%.0f\" "
       "viewBox=\"%.9g %.9g %.9g %.9g\">\n",
       w * scale, h * scale, x0 - pad, -(y1 + pad), w, h);
  out += "<g stroke-linecap=\"round\">\n";
  for (const Edge& e : edges) {
    if (e.u >= inst.size() || e.v >= inst.size()) throw std::out_of_range("edge references an unknown point");
    const Vec2 a = inst.pos(e.u), b = inst.pos(e.v);
    const double width = style.stroke_width * side * (e.cls == EdgeClass::Purple ? 1.5 : 1.0);
    emit("<line x1=\"%.9g\" y1=\"%.9g\" x2=\"%.9g\" y2=\"%.9g\" stroke=\"%s\" stroke-width=\"%.9g\"/>\n", a.x, -a.y,
         b.x, -b.y, svg_color(e.cls), width);
  }
  out += "</g>\n<g>\n";
  for (const auto& p : inst.points()) {
    emit("<circle cx=\"%.9g\" cy=\"%.9g\" r=\"%.9g\" fill=\"%s\"/>\n", p.x, -p.y, style.point_radius * side,
         svg_color(p.color));
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace rbp
