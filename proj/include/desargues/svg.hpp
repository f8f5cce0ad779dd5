#pragma once

// SVG drawing of an addition or multiplication construction. Only rational
// coordinates can be placed in the drawing plane; other backends are
// rejected with UnsupportedBackend. Output depends only on the trace, so
// identical input gives identical bytes.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <type_traits>
#include <utility>

#include "desargues/constructions.hpp"
#include "desargues/error.hpp"
#include "desargues/rational.hpp"

namespace desargues {

namespace detail {

inline std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v == 0.0 ? 0.0 : v);  // no "-0.0000"
  return buf;
}

struct Box {
  double x0, y0, x1, y1;
};

// Clips base + t·dir to the box (Liang-Barsky); false when it misses.
inline bool clip(const Box& box, double bx, double by, double dx, double dy,
                 std::array<double, 4>& seg) {
  double t0 = -1e300, t1 = 1e300;
  auto edge = [&](double p, double q) {
    if (p == 0.0) return q >= 0.0;
    const double r = q / p;
    if (p < 0.0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
    return true;
  };
  if (!edge(-dx, bx - box.x0) || !edge(dx, box.x1 - bx) || !edge(-dy, by - box.y0) ||
      !edge(dy, box.y1 - by) || t0 > t1) {
    return false;
  }
  seg = {bx + t0 * dx, by + t0 * dy, bx + t1 * dx, by + t1 * dy};
  return true;
}

}  // namespace detail

template <SkewScalar S>
std::string render_svg(const ConstructionTrace<S>& trace) {
  if constexpr (!std::is_same_v<S, Rational>) {
    throw Error(ErrorKind::UnsupportedBackend, "SVG output needs rational coordinates");
  } else {
    const std::array<std::pair<const char*, const Point<Rational>*>, 7> labeled{{
        {"O", &trace.origin},
        {"I", &trace.unit},
        {"A", &trace.a},
        {"B", &trace.b},
        {"B1", &trace.aux},
        {"P1", &trace.p1},
        {"C", &trace.result},
    }};
    detail::Box box{1e300, 1e300, -1e300, -1e300};
    for (const auto& [name, p] : labeled) {
      const double x = p->x.approx(), y = p->y.approx();
      box = {std::min(box.x0, x), std::min(box.y0, y), std::max(box.x1, x), std::max(box.y1, y)};
    }
    const double w = std::max(box.x1 - box.x0, 1.0);
    const double h = std::max(box.y1 - box.y0, 1.0);
    box = {box.x0 - 0.1 * w, box.y0 - 0.1 * h, box.x0 + 1.1 * w, box.y0 + 1.1 * h};
    const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
    const double stroke = span * 0.004;
    const double radius = span * 0.008;
    const double font = span * 0.035;

    // SVG y grows downwards; plane y is negated on output.
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"" +
           detail::fmt_coord(box.x0) + " " + detail::fmt_coord(-box.y1) + " " +
           detail::fmt_coord(box.x1 - box.x0) + " " + detail::fmt_coord(box.y1 - box.y0) + "\">\n";
    out += std::string("<title>") + (trace.op == ConstructionOp::Add ? "addition" : "multiplication") +
           " of points on line OI</title>\n";
    for (std::size_t i = 0; i < trace.lines.size(); ++i) {
      const auto& l = trace.lines[i];
      std::array<double, 4> seg{};
      if (!detail::clip(box, l.base().x.approx(), l.base().y.approx(), l.direction().x.approx(),
                        l.direction().y.approx(), seg)) {
        continue;
      }
      out += "<line class=\"" + std::string(i == 0 ? "base" : "construction") + "\" x1=\"" +
             detail::fmt_coord(seg[0]) + "\" y1=\"" + detail::fmt_coord(-seg[1]) + "\" x2=\"" +
             detail::fmt_coord(seg[2]) + "\" y2=\"" + detail::fmt_coord(-seg[3]) + "\" stroke=\"" +
             (i == 0 ? "black" : "gray") + "\" stroke-width=\"" + detail::fmt_coord(stroke) + "\"/>\n";
    }
    for (const auto& [name, p] : labeled) {
      const std::string x = detail::fmt_coord(p->x.approx());
      const std::string y = detail::fmt_coord(-p->y.approx());
      out += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"" + detail::fmt_coord(radius) +
             "\" fill=\"black\"/>\n";
      out += "<text x=\"" + detail::fmt_coord(p->x.approx() + radius) + "\" y=\"" +
             detail::fmt_coord(-p->y.approx() - radius) + "\" font-size=\"" + detail::fmt_coord(font) +
             "\">" + name + "</text>\n";
    }
    out += "</svg>\n";
    return out;
  }
}

template <SkewScalar S>
void emit_svg(const ConstructionTrace<S>& trace, const std::string& path) {
  const std::string svg = render_svg(trace);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << svg;
}

}  // namespace desargues
