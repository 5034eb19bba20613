#include "relemb/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace relemb {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr const char* kProPalette[] = {"#1b7f79", "#6fc2b8", "#2a9d8f", "#9ad1c9", "#135e5a", "#4fb3a9"};
constexpr const char* kAntiPalette[] = {"#d9480f", "#f08c00", "#a61e4d", "#e8590c", "#862e9c", "#f59f00",
                                        "#c92a2a", "#5f3dc4"};

// Point at parameter t on the quadratic curve drawn for arc a.
struct ArcGeometry {
  Point from, ctrl, to;
  Point at(double t) const {
    double u = 1 - t;
    return {u * u * from.x + 2 * u * t * ctrl.x + t * t * to.x,
            u * u * from.y + 2 * u * t * ctrl.y + t * t * to.y};
  }
};

}  // namespace

std::string render_svg(const Embedding& e) {
  const Digraph& d = e.digraph();
  const int n = d.num_vertices();
  const double size = 640, radius = 240, center = 300;
  std::vector<Point> pos(n);
  for (int v = 0; v < n; ++v) {
    double angle = 2 * std::numbers::pi * v / std::max(n, 1) - std::numbers::pi / 2;
    pos[v] = n == 1 ? Point{center, center} : Point{center + radius * std::cos(angle), center + radius * std::sin(angle)};
  }

  // Parallel arcs and loops fan out by their index among arcs with the same ends.
  std::map<std::pair<int, int>, int> seen;
  std::vector<ArcGeometry> geo(d.num_arcs());
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    const Point p = pos[d.tail(a)], q = pos[d.head(a)];
    const int idx = seen[{std::min(d.tail(a), d.head(a)), std::max(d.tail(a), d.head(a))}]++;
    if (d.tail(a) == d.head(a)) {
      double dx = p.x - center, dy = p.y - center;
      double len = std::hypot(dx, dy);
      if (len < 1) dx = 0, dy = -1, len = 1;
      const double reach = 50 + 18 * idx;
      const double spread = 0.5 + 0.15 * idx;
      Point out{p.x + dx / len * reach, p.y + dy / len * reach};
      geo[a] = {p, {out.x - dy / len * reach * spread, out.y + dx / len * reach * spread}, p};
    } else {
      double mx = (p.x + q.x) / 2, my = (p.y + q.y) / 2;
      double dx = q.x - p.x, dy = q.y - p.y;
      double len = std::max(std::hypot(dx, dy), 1.0);
      double bend = 14 + 16 * idx;
      geo[a] = {p, {mx - dy / len * bend, my + dx / len * bend}, q};
    }
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\"" << fmt(size + 20)
      << "\" viewBox=\"0 0 " << fmt(size) << " " << fmt(size + 20) << "\">\n";
  out << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
         "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#333\"/></marker></defs>\n";

  auto faces = [&](const std::vector<FaceWalk>& walks, const char* cls, const char* const* palette,
                   std::size_t colors, double t) {
    for (std::size_t i = 0; i < walks.size(); ++i) {
      out << "<polyline class=\"" << cls << "\" fill=\"none\" stroke-width=\"3\" stroke-opacity=\"0.7\" stroke=\""
          << palette[i % colors] << "\" points=\"";
      bool first = true;
      for (ArcId a : walks[i].arcs()) {
        for (double s : {t, 1 - t}) {
          Point p = geo[a].at(s);
          out << (first ? "" : " ") << fmt(p.x) << "," << fmt(p.y);
          first = false;
        }
      }
      Point p = geo[walks[i].arcs().front()].at(t);
      out << " " << fmt(p.x) << "," << fmt(p.y) << "\"/>\n";
    }
  };
  faces(e.profaces(), "proface", kProPalette, std::size(kProPalette), 0.3);
  faces(e.antifaces(), "antiface", kAntiPalette, std::size(kAntiPalette), 0.4);

  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    const ArcGeometry& g = geo[a];
    out << "<path class=\"arc\" data-arc=\"" << a << "\" fill=\"none\" stroke=\"#333\" marker-end=\"url(#head)\" d=\"M"
        << fmt(g.from.x) << "," << fmt(g.from.y) << " Q" << fmt(g.ctrl.x) << "," << fmt(g.ctrl.y) << " "
        << fmt(g.to.x) << "," << fmt(g.to.y) << "\"/>\n";
  }
  for (int v = 0; v < n; ++v) {
    out << "<circle class=\"vertex\" cx=\"" << fmt(pos[v].x) << "\" cy=\"" << fmt(pos[v].y)
        << "\" r=\"10\" fill=\"#fff\" stroke=\"#000\"/>\n";
    out << "<text x=\"" << fmt(pos[v].x) << "\" y=\"" << fmt(pos[v].y + 4)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "<g class=\"legend\" font-size=\"12\">\n";
  out << "<text x=\"10\" y=\"" << fmt(size + 10) << "\">profaces: " << e.num_profaces()
      << "   antifaces: " << e.num_antifaces() << "</text>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace relemb
