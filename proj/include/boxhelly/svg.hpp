#pragma once

#include <array>
#include <string>
#include <vector>

#include "boxhelly/io.hpp"

namespace boxhelly {

struct RenderOptions {
  Rational scale = Rational(40);   // pixels per unit
  Rational margin = Rational(20);  // pixels around the content
  std::vector<Point> witness;      // drawn as cross markers
};

namespace detail {

// exact rational -> decimal text with at most 6 places, no floating point
inline std::string px(const Rational& r) {
  const BigInt scale = 1000000;
  BigInt scaled = numerator(r) * scale * 2;
  BigInt den = denominator(r);
  BigInt adjusted = scaled >= 0 ? BigInt(scaled + den) : BigInt(scaled - den);
  BigInt rounded = adjusted / (2 * den);
  bool negative = rounded < 0;
  if (negative) rounded = -rounded;
  BigInt whole = rounded / scale;
  BigInt frac = rounded % scale;
  std::string out = (negative && (whole != 0 || frac != 0)) ? "-" : "";
  out += whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

inline const std::array<const char*, 10>& palette() {
  static const std::array<const char*, 10> colors = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors;
}

}  // namespace detail

// One rectangle per box inside a <g> per class; witness points become
// crosses. Output is SVG 1.1 text, identical for identical inputs.
inline std::string render_svg(const InstanceDocument& doc, const RenderOptions& options = {}) {
  if (doc.dim != 2) throw std::invalid_argument("render requires dimension 2");

  std::vector<std::vector<const AxisBox*>> groups;
  if (doc.kind == InstanceDocument::Kind::family) {
    groups.emplace_back();
    for (const AxisBox& b : doc.family->boxes) groups.back().push_back(&b);
  } else if (doc.kind == InstanceDocument::Kind::color_system) {
    for (const Family& cls : doc.system->classes) {
      groups.emplace_back();
      for (const AxisBox& b : cls.boxes) groups.back().push_back(&b);
    }
  }
  std::vector<const Point*> dots;
  if (doc.kind == InstanceDocument::Kind::cluster_instance)
    for (const Point& p : doc.cluster->points) dots.push_back(&p);

  // content bounds
  bool any = false;
  Rational min_x, max_x, min_y, max_y;
  auto grow = [&](const Rational& x, const Rational& y) {
    if (!any) {
      min_x = max_x = x;
      min_y = max_y = y;
      any = true;
      return;
    }
    if (x < min_x) min_x = x;
    if (x > max_x) max_x = x;
    if (y < min_y) min_y = y;
    if (y > max_y) max_y = y;
  };
  for (auto& group : groups)
    for (const AxisBox* b : group) {
      grow(b->sides[0].lo, b->sides[1].lo);
      grow(b->sides[0].hi, b->sides[1].hi);
    }
  for (const Point* p : dots) grow(p->coords[0], p->coords[1]);
  for (const Point& p : options.witness) grow(p.coords[0], p.coords[1]);

  const Rational& s = options.scale;
  const Rational& m = options.margin;
  Rational width = any ? (max_x - min_x) * s + 2 * m : Rational(1);
  Rational height = any ? (max_y - min_y) * s + 2 * m : Rational(1);
  auto sx = [&](const Rational& x) { return (x - min_x) * s + m; };
  auto sy = [&](const Rational& y) { return (max_y - y) * s + m; };  // y grows upward

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         detail::px(width) + " " + detail::px(height) + "\">\n";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const char* color = detail::palette()[g % detail::palette().size()];
    out += "  <g id=\"class-" + std::to_string(g + 1) + "\" fill=\"" + color +
           "\" fill-opacity=\"0.3\" stroke=\"" + color + "\" stroke-width=\"1.5\">\n";
    for (const AxisBox* b : groups[g]) {
      out += "    <rect x=\"" + detail::px(sx(b->sides[0].lo)) + "\" y=\"" +
             detail::px(sy(b->sides[1].hi)) + "\" width=\"" +
             detail::px((b->sides[0].hi - b->sides[0].lo) * s) + "\" height=\"" +
             detail::px((b->sides[1].hi - b->sides[1].lo) * s) + "\"/>\n";
    }
    out += "  </g>\n";
  }
  if (!dots.empty()) {
    out += "  <g id=\"points\" fill=\"#000000\">\n";
    for (const Point* p : dots)
      out += "    <circle cx=\"" + detail::px(sx(p->coords[0])) + "\" cy=\"" +
             detail::px(sy(p->coords[1])) + "\" r=\"2\"/>\n";
    out += "  </g>\n";
  }
  if (!options.witness.empty()) {
    out += "  <g id=\"witness\" stroke=\"#000000\" stroke-width=\"2\">\n";
    for (const Point& p : options.witness) {
      std::string cx = detail::px(sx(p.coords[0]));
      std::string cy = detail::px(sy(p.coords[1]));
      std::string lo_x = detail::px(sx(p.coords[0]) - 6);
      std::string hi_x = detail::px(sx(p.coords[0]) + 6);
      std::string lo_y = detail::px(sy(p.coords[1]) - 6);
      std::string hi_y = detail::px(sy(p.coords[1]) + 6);
      out += "    <line x1=\"" + lo_x + "\" y1=\"" + cy + "\" x2=\"" + hi_x +
             "\" y2=\"" + cy + "\"/>\n";
      out += "    <line x1=\"" + cx + "\" y1=\"" + lo_y + "\" x2=\"" + cx +
             "\" y2=\"" + hi_y + "\"/>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace boxhelly
