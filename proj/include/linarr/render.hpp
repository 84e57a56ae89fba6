#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linarr/incidence.hpp"

namespace linarr {

namespace detail {

/// Fixed-point decimal rendering of an exact rational (3 places, round
/// half away from zero). Keeps the SVG byte-identical across runs without
/// ever touching floating point.
inline std::string svg_num(const Rat& r) {
  Int n = rat_num(r) * 1000;
  Int d = rat_den(r);  // always positive
  Int milli = n / d;
  Int rem = n % d;
  if (2 * abs(rem) >= d) milli += (n >= 0) ? 1 : -1;
  bool neg = milli < 0;
  Int m = abs(milli);
  std::string digits = Int(m / 1000).str();
  std::string frac = Int(m % 1000).str();
  frac.insert(frac.begin(), 3 - frac.size(), '0');
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  std::string out = (neg ? "-" : "") + digits;
  if (frac != "0") out += "." + frac;
  return out;
}

struct Box {
  Rat x0, y0, x1, y1;
};

/// Clips the affine line a*x + b*y + c = 0 against the box, exactly.
inline std::optional<std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>>>
clip_line(const Rat& a, const Rat& b, const Rat& c, const Box& box) {
  std::vector<std::pair<Rat, Rat>> hits;
  auto push = [&](const Rat& x, const Rat& y) {
    for (auto& [px, py] : hits)
      if (px == x && py == y) return;
    hits.push_back({x, y});
  };
  if (b != 0) {
    for (const Rat& x : {box.x0, box.x1}) {
      Rat y = -(a * x + c) / b;
      if (y >= box.y0 && y <= box.y1) push(x, y);
    }
  }
  if (a != 0) {
    for (const Rat& y : {box.y0, box.y1}) {
      Rat x = -(b * y + c) / a;
      if (x >= box.x0 && x <= box.x1) push(x, y);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  std::ranges::sort(hits);
  return std::make_pair(hits.front(), hits.back());
}

}  // namespace detail

/// Deterministic SVG of the affine chart z = 1. Every arrangement line
/// becomes one <line class="arrline"> element (the line z = 0 is drawn
/// along the frame's top edge with a legend note), every point of M one
/// <circle class="mpoint">; points at infinity are marked where their
/// direction leaves the frame.
inline std::string render_svg(const IncidenceStructure& inc) {
  using detail::svg_num;
  const auto& arr = inc.arr;

  // viewport: bounding box of the affine M-points, else all double points
  std::vector<std::pair<Rat, Rat>> anchors;
  for (const auto& mp : inc.points) {
    if (mp.point.at_infinity()) continue;
    if (mp.multiplicity < 3 && !inc.m_points.empty()) continue;
    Rat z(mp.point.coords[2]);
    anchors.push_back({Rat(mp.point.coords[0]) / z, Rat(mp.point.coords[1]) / z});
  }
  detail::Box box{-5, -5, 5, 5};
  if (!anchors.empty()) {
    box = {anchors[0].first, anchors[0].second, anchors[0].first,
           anchors[0].second};
    for (const auto& [x, y] : anchors) {
      box.x0 = std::min(box.x0, x);
      box.y0 = std::min(box.y0, y);
      box.x1 = std::max(box.x1, x);
      box.y1 = std::max(box.y1, y);
    }
    Rat padx = (box.x1 - box.x0 + 2) / 4, pady = (box.y1 - box.y0 + 2) / 4;
    box = {box.x0 - padx, box.y0 - pady, box.x1 + padx, box.y1 + pady};
  }

  const Rat W = 800, H = 800;
  Rat sx = W / (box.x1 - box.x0), sy = H / (box.y1 - box.y0);
  auto X = [&](const Rat& x) { return (x - box.x0) * sx; };
  auto Y = [&](const Rat& y) { return H - (y - box.y0) * sy; };  // y up

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n";
  svg << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"800\" height=\"800\" "
         "fill=\"white\" stroke=\"black\"/>\n";

  std::vector<std::string> legend;
  for (int i = 0; i < arr.size(); ++i) {
    const auto& l = arr.lines[i];
    Rat a(l.coeffs[0]), b(l.coeffs[1]), c(l.coeffs[2]);
    if (a == 0 && b == 0) {
      // the chart's line at infinity: drawn along the top frame edge
      svg << "<line class=\"arrline at-infinity\" x1=\"0\" y1=\"0\" "
             "x2=\"800\" y2=\"0\" stroke=\"grey\" stroke-dasharray=\"8 4\"/>"
          << "\n";
      legend.push_back(arr.labels[i] + " is the line at infinity (frame top)");
      continue;
    }
    auto seg = detail::clip_line(a, b, c, box);
    if (!seg) {
      // outside the viewport; pin a degenerate segment to the frame corner
      svg << "<line class=\"arrline off-chart\" x1=\"0\" y1=\"0\" x2=\"0\" "
             "y2=\"0\" stroke=\"black\"/>\n";
      legend.push_back(arr.labels[i] + " lies outside the viewport");
      continue;
    }
    auto [p, q] = *seg;
    svg << "<line class=\"arrline\" x1=\"" << svg_num(X(p.first)) << "\" y1=\""
        << svg_num(Y(p.second)) << "\" x2=\"" << svg_num(X(q.first))
        << "\" y2=\"" << svg_num(Y(q.second)) << "\" stroke=\"black\"/>\n";
  }

  for (int pi : inc.m_points) {
    const auto& mp = inc.points[pi];
    Rat cx, cy;
    bool infinite = mp.point.at_infinity();
    if (!infinite) {
      Rat z(mp.point.coords[2]);
      cx = X(Rat(mp.point.coords[0]) / z);
      cy = Y(Rat(mp.point.coords[1]) / z);
    } else {
      // direction marker on the frame: walk from the center along (dx,dy)
      Rat dx(mp.point.coords[0]), dy(mp.point.coords[1]);
      Rat cxm = (box.x0 + box.x1) / 2, cym = (box.y0 + box.y1) / 2;
      Rat tx = dx == 0 ? Rat(0) : (dx > 0 ? (box.x1 - cxm) / dx
                                          : (box.x0 - cxm) / dx);
      Rat ty = dy == 0 ? Rat(0) : (dy > 0 ? (box.y1 - cym) / dy
                                          : (box.y0 - cym) / dy);
      Rat t = (tx == 0) ? ty : (ty == 0 ? tx : std::min(tx, ty));
      cx = X(cxm + t * dx);
      cy = Y(cym + t * dy);
    }
    svg << "<circle class=\"mpoint" << (infinite ? " at-infinity" : "")
        << "\" cx=\"" << svg_num(cx) << "\" cy=\"" << svg_num(cy)
        << "\" r=\"6\" fill=\"red\"/>\n";
  }

  int ty = 20;
  for (const auto& note : legend) {
    svg << "<text class=\"legend\" x=\"10\" y=\"" << ty
        << "\" font-size=\"14\">" << note << "</text>\n";
    ty += 18;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace linarr
