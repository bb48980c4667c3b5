#include "seifert/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace seifert {

namespace {

constexpr std::int64_t kMargin = 40;

std::int64_t side(const LensSpace& lens) {
  const std::int64_t p = std::max<std::int64_t>(lens.p, 1);
  return p * ((480 + p - 1) / p);
}

struct Frame {
  double s, q_over_p;
  double top;  // SVG y of domain height 1

  std::pair<double, double> map(double x, double y) const {
    const double ys = y - q_over_p * x;
    return {static_cast<double>(kMargin) + s * x, top + s * (1.0 - ys)};
  }
};

Frame frame(const LensSpace& lens) {
  return {static_cast<double>(side(lens)), static_cast<double>(lens.q) / static_cast<double>(std::max<std::int64_t>(lens.p, 1)),
          static_cast<double>(kMargin)};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Pieces of a lifted segment cut at integer grid lines, each moved into [0,1]^2.
std::vector<std::array<double, 4>> clip(double x0, double y0, double x1, double y1) {
  std::vector<double> ts{0.0, 1.0};
  auto cuts = [&](double a, double b) {
    if (a == b) return;
    const double lo = std::min(a, b), hi = std::max(a, b);
    for (double k = std::ceil(lo); k <= std::floor(hi); k += 1.0) {
      const double t = (k - a) / (b - a);
      if (t > 0.0 && t < 1.0) ts.push_back(t);
    }
  };
  cuts(x0, x1);
  cuts(y0, y1);
  std::sort(ts.begin(), ts.end());
  std::vector<std::array<double, 4>> out;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double ta = ts[i], tb = ts[i + 1];
    if (tb - ta < 1e-12) continue;
    const double mx = x0 + (x1 - x0) * (ta + tb) / 2, my = y0 + (y1 - y0) * (ta + tb) / 2;
    const double fx = std::floor(mx), fy = std::floor(my);
    out.push_back({x0 + (x1 - x0) * ta - fx, y0 + (y1 - y0) * ta - fy, x0 + (x1 - x0) * tb - fx,
                   y0 + (y1 - y0) * tb - fy});
  }
  return out;
}

void draw_segment(std::ostringstream& os, const Frame& f, double x0, double y0, double x1, double y1,
                  const std::string& color, double width) {
  for (const auto& c : clip(x0, y0, x1, y1)) {
    const auto [ax, ay] = f.map(c[0], c[1]);
    const auto [bx, by] = f.map(c[2], c[3]);
    os << "<line x1=\"" << num(ax) << "\" y1=\"" << num(ay) << "\" x2=\"" << num(bx) << "\" y2=\"" << num(by)
       << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }
}

void draw_cycle(std::ostringstream& os, const Frame& f, const PLCycle& c, const std::string& color, double width) {
  for (std::size_t e = 0; e < c.size(); ++e) {
    const Vec2 a = c.vertex(e), b = a + c.edge_vector(e);
    draw_segment(os, f, to_double(a.x), to_double(a.y), to_double(b.x), to_double(b.y), color, width);
  }
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> domain_corners(const LensSpace& lens) {
  const std::int64_t s = side(lens);
  const std::int64_t drop = lens.p > 0 ? s / lens.p * lens.q : 0;
  // torus points (0,0), (1,0), (1,1), (0,1) after the shear, y axis pointing down
  return {{kMargin, kMargin + s}, {kMargin + s, kMargin + s + drop}, {kMargin + s, kMargin + drop}, {kMargin, kMargin}};
}

std::string render_svg(const KnotDiagram& d, const std::vector<Overlay>& overlays) {
  const Frame f = frame(d.lens);
  const auto corners = domain_corners(d.lens);
  const std::int64_t s = side(d.lens);
  const std::int64_t width = s + 2 * kMargin;
  const std::int64_t height = corners[1].second + kMargin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<title>L(" << d.lens.p << "," << d.lens.q << ") diagram, class (" << d.curve.homology_class().x << ","
     << d.curve.homology_class().y << "), " << d.crossings.size() << " crossings</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<polygon id=\"domain\" data-edge-slope=\"" << -d.lens.q << "/" << d.lens.p << "\" points=\"";
  for (std::size_t i = 0; i < corners.size(); ++i)
    os << (i ? " " : "") << corners[i].first << "," << corners[i].second;
  os << "\" fill=\"#f6f6f6\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  for (const auto& ov : overlays) {
    os << "<g id=\"" << ov.label << "\">\n";
    for (const auto& c : ov.curves) draw_cycle(os, f, c, ov.color, 1.5);
    os << "</g>\n";
  }

  os << "<g id=\"knot\">\n";
  draw_cycle(os, f, d.curve, "black", 2.0);
  for (const auto& cr : d.crossings) {
    const EdgeLocation& over = cr.over == Over::Earlier ? cr.geometry.a : cr.geometry.b;
    const Vec2 dir = d.curve.edge_vector(over.edge);
    const double len = std::hypot(to_double(dir.x), to_double(dir.y));
    const double t = to_double(over.t), h = std::min(0.03 / len, 0.45 * std::min(t, 1.0 - t));
    const Vec2 base = d.curve.vertex(over.edge);
    const double bx = to_double(base.x), by = to_double(base.y), dx = to_double(dir.x), dy = to_double(dir.y);
    const double x0 = bx + dx * (t - h), y0 = by + dy * (t - h), x1 = bx + dx * (t + h), y1 = by + dy * (t + h);
    draw_segment(os, f, x0, y0, x1, y1, "white", 7.0);
    draw_segment(os, f, x0, y0, x1, y1, "black", 2.0);
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace seifert
