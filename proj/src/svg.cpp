#include "hexcount/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace hexcount {

namespace {

constexpr double kSide = 20.0;
constexpr double kH = 0.86602540378443865;  // sqrt(3)/2

struct Pt {
  double x, y;
};

struct Mapper {
  double ymax_cart;
  // oblique lattice point -> SVG coordinates (origin lower-left, y flipped)
  Pt operator()(long x, long y) const {
    return {kSide * (x + y * 0.5), ymax_cart - kSide * (y * kH)};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // avoid -0.00
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

using Edge = std::pair<std::pair<long, long>, std::pair<long, long>>;

std::vector<Edge> cell_edges(const TriCell& c) {
  std::pair<long, long> a, b, d;
  if (c.o == Orient::up) {
    a = {c.x, c.y};
    b = {c.x + 1, c.y};
    d = {c.x, c.y + 1};
  } else {
    a = {c.x + 1, c.y};
    b = {c.x, c.y + 1};
    d = {c.x + 1, c.y + 1};
  }
  auto mk = [](std::pair<long, long> p, std::pair<long, long> q) {
    return p < q ? Edge{p, q} : Edge{q, p};
  };
  return {mk(a, b), mk(b, d), mk(a, d)};
}

}  // namespace

std::string render_svg(const Region& region, const MarkSet* marks, const Tiling* tiling) {
  double cxmin = 0, cxmax = 0;
  long ymin = 0, ymax = 0;
  bool first = true;
  for (const TriCell& c : region.cells()) {
    for (const Edge& e : cell_edges(c))
      for (auto [px, py] : {e.first, e.second}) {
        double cx = px + py * 0.5;
        if (first) {
          cxmin = cxmax = cx;
          ymin = ymax = py;
          first = false;
        }
        cxmin = std::min(cxmin, cx);
        cxmax = std::max(cxmax, cx);
        ymin = std::min(ymin, py);
        ymax = std::max(ymax, py);
      }
  }
  const double pad = kSide;
  const double w = kSide * (cxmax - cxmin) + 2 * pad;
  const double h = kSide * (ymax - ymin) * kH + 2 * pad;
  Mapper map{kSide * (ymax * kH)};
  const double ox = -kSide * cxmin + pad;
  const double oy = pad;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
     << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
  os << "<g transform=\"translate(" << fmt(ox) << " " << fmt(oy) << ")\">\n";

  if (tiling != nullptr) {
    for (const LozengePos& p : tiling->lozenges) {
      // quadrilateral vertices in drawing order
      long x = p.x(), y = p.y();
      std::vector<std::pair<long, long>> q;
      switch (p.orient()) {
        case LozOrient::lean_right:
          q = {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
          break;
        case LozOrient::lean_left:
          q = {{x + 1, y}, {x, y}, {x - 1, y + 1}, {x, y + 1}};
          break;
        case LozOrient::upright:
          q = {{x, y}, {x + 1, y - 1}, {x + 1, y}, {x, y + 1}};
          break;
      }
      const char* fill = p.orient() == LozOrient::lean_right ? "#c6dbef"
                         : p.orient() == LozOrient::lean_left ? "#fdd0a2"
                                                              : "#c7e9c0";
      os << "<polygon fill=\"" << fill << "\" stroke=\"#555\" stroke-width=\"1\" points=\"";
      for (size_t i = 0; i < q.size(); ++i) {
        Pt pt = map(q[i].first, q[i].second);
        if (i) os << ' ';
        os << fmt(pt.x) << ',' << fmt(pt.y);
      }
      os << "\"/>\n";
    }
  }

  // region outline: edges belonging to exactly one cell
  std::map<Edge, int> edge_count;
  for (const TriCell& c : region.cells())
    for (const Edge& e : cell_edges(c)) edge_count[e]++;
  for (const auto& [e, n] : edge_count) {
    if (n != 1) continue;
    Pt p1 = map(e.first.first, e.first.second);
    Pt p2 = map(e.second.first, e.second.second);
    os << "<line x1=\"" << fmt(p1.x) << "\" y1=\"" << fmt(p1.y) << "\" x2=\"" << fmt(p2.x)
       << "\" y2=\"" << fmt(p2.y) << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  }

  if (marks != nullptr) {
    for (const LozengePos& p : marks->marks) {
      // ellipse centered in the lozenge, long axis along the long diagonal
      long x = p.x(), y = p.y();
      Pt c1, c2;  // endpoints of the long diagonal
      switch (p.orient()) {
        case LozOrient::lean_right:
          c1 = map(x, y);
          c2 = map(x + 1, y + 1);
          break;
        case LozOrient::lean_left:
          c1 = map(x + 1, y);
          c2 = map(x - 1, y + 1);
          break;
        case LozOrient::upright:
          c1 = map(x + 1, y - 1);
          c2 = map(x, y + 1);
          break;
      }
      double cx = (c1.x + c2.x) / 2, cy = (c1.y + c2.y) / 2;
      double ang = std::atan2(c2.y - c1.y, c2.x - c1.x) * 180.0 / 3.14159265358979324;
      os << "<ellipse cx=\"0\" cy=\"0\" rx=\"" << fmt(kSide * 0.62) << "\" ry=\""
         << fmt(kSide * 0.28) << "\" fill=\"none\" stroke=\"#d00\" stroke-width=\"1.5\""
         << " transform=\"translate(" << fmt(cx) << " " << fmt(cy) << ") rotate("
         << fmt(ang) << ")\"/>\n";
    }
  }

  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace hexcount
