#include "twobridge/billiard.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "twobridge/errors.hpp"

namespace twobridge {

BilliardGeometry billiard_geometry(std::size_t n) {
  if (n == 0 || n % 3 == 2) {
    throw InvalidInput("billiard diagram needs n >= 1 with n = 0 or 1 mod 3, got " + std::to_string(n));
  }
  BilliardGeometry g;
  g.width = static_cast<int>(n) + 1;

  LatticePoint p{0, 0};
  int dx = 1;
  int dy = 1;
  g.vertices.push_back(p);
  auto is_corner = [&](LatticePoint q) {
    return (q.x == 0 || q.x == g.width) && (q.y == 0 || q.y == g.height);
  };
  do {
    p = {p.x + dx, p.y + dy};
    g.vertices.push_back(p);
    if (p.x == 0 || p.x == g.width) dx = -dx;
    if (p.y == 0 || p.y == g.height) dy = -dy;
  } while (!is_corner(p));

  // Interior lattice points are each visited twice, once along each diagonal.
  std::map<int, Crossing> by_x;
  std::map<std::pair<int, int>, std::size_t> first_visit;
  for (std::size_t s = 1; s + 1 < g.vertices.size(); ++s) {
    const auto q = g.vertices[s];
    if (q.x <= 0 || q.x >= g.width || q.y <= 0 || q.y >= g.height) continue;
    auto [it, fresh] = first_visit.emplace(std::pair{q.x, q.y}, s);
    if (fresh) continue;
    Crossing c;
    c.at = q;
    for (std::size_t step : {it->second, s}) {
      const auto prev = g.vertices[step - 1];
      const bool positive = (q.x - prev.x) * (q.y - prev.y) > 0;
      (positive ? c.positive_step : c.negative_step) = step;
    }
    by_x[q.x] = c;
  }
  for (auto& [x, c] : by_x) g.crossings.push_back(c);
  return g;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Word& w, const RenderOptions& options) {
  const auto g = billiard_geometry(w.size());
  const double s = options.scale;
  const double margin = 1.0;
  const double width_px = (g.width + 2 * margin) * s;
  const double height_px = (g.height + 2 * margin) * s;
  auto X = [&](double x) { return fmt((x + margin) * s); };
  auto Y = [&](double y) { return fmt((g.height - y + margin) * s); };

  // Vertex index of each under-crossing; segments touching it are cut short.
  std::map<std::size_t, bool> under_vertex;
  for (std::size_t i = 0; i < g.crossings.size(); ++i) {
    const bool positive_over = (w[i] == 1) != options.flip_crossings;
    const auto& c = g.crossings[i];
    under_vertex[positive_over ? c.negative_step : c.positive_step] = true;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width_px) << "\" height=\""
      << fmt(height_px) << "\" viewBox=\"0 0 " << fmt(width_px) << " " << fmt(height_px) << "\">\n"
      << "<title>billiard table diagram " << (w.empty() ? "(empty)" : w.str()) << " on T(3," << g.width
      << ")</title>\n";

  out << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (int x = 0; x <= g.width; ++x) {
    out << "<line x1=\"" << X(x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(g.height)
        << "\"/>\n";
  }
  for (int y = 0; y <= g.height; ++y) {
    out << "<line x1=\"" << X(0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(g.width) << "\" y2=\"" << Y(y)
        << "\"/>\n";
  }
  out << "</g>\n";

  const double gap = 0.22;
  out << "<g stroke=\"#000000\" stroke-width=\"3\" stroke-linecap=\"round\" fill=\"none\">\n";
  for (std::size_t k = 1; k < g.vertices.size(); ++k) {
    const auto a = g.vertices[k - 1];
    const auto b = g.vertices[k];
    const double ux = (b.x - a.x) * gap;
    const double uy = (b.y - a.y) * gap;
    double x0 = a.x, y0 = a.y, x1 = b.x, y1 = b.y;
    if (under_vertex.contains(k - 1)) {
      x0 += ux;
      y0 += uy;
    }
    if (under_vertex.contains(k)) {
      x1 -= ux;
      y1 -= uy;
    }
    out << "<line x1=\"" << X(x0) << "\" y1=\"" << Y(y0) << "\" x2=\"" << X(x1) << "\" y2=\"" << Y(y1)
        << "\"/>\n";
  }

  // Closure outside the table: down from the start, along the bottom, and up
  // the right side when the trajectory ends in the top corner.
  const auto end = g.vertices.back();
  const double out_pad = 0.5;
  out << "<path d=\"M " << X(0) << " " << Y(0) << " L " << X(-out_pad) << " " << Y(-out_pad) << " L "
      << X(g.width + out_pad) << " " << Y(-out_pad);
  if (end.y == g.height) out << " L " << X(g.width + out_pad) << " " << Y(g.height + out_pad);
  out << " L " << X(end.x) << " " << Y(end.y) << "\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace twobridge
