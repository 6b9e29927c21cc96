#include "zonogon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace zonogon {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTol = 1e-9;

std::array<double, 2> travel_vector(const TilingComplex& c, int e) {
  // Tail->head orientation follows the slope convention, so directions in
  // the upper half of the fan travel with negative angle.
  double angle = phi_units(c.k(), c.edges[e].dir) * kPi / c.k();
  double len = 1.0 / c.mult.m[c.edges[e].dir - 1];
  return {len * std::cos(angle), len * std::sin(angle)};
}

const char* fill_for(std::size_t sides) {
  switch (sides) {
    case 4: return "#9ecae1";
    case 6: return "#a1d99b";
    case 8: return "#fdae6b";
    case 10: return "#bcbddc";
    case 12: return "#fa9fb5";
    default: return "#d9d9d9";
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::vector<std::array<double, 2>> embed_vertices(const TilingComplex& c) {
  std::vector<std::array<double, 2>> pos(c.vertex_count, {0.0, 0.0});
  std::vector<bool> placed(c.vertex_count, false);
  if (c.vertex_count == 0) return pos;
  placed[0] = true;
  std::queue<int> frontier;
  frontier.push(0);
  std::vector<std::vector<int>> incident(c.vertex_count);
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    incident[c.edges[e].tail].push_back(static_cast<int>(e));
    incident[c.edges[e].head].push_back(static_cast<int>(e));
  }
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int e : incident[v]) {
      auto vec = travel_vector(c, e);
      int other = c.edges[e].tail == v ? c.edges[e].head : c.edges[e].tail;
      double sign = c.edges[e].tail == v ? 1.0 : -1.0;
      std::array<double, 2> p = {pos[v][0] + sign * vec[0],
                                 pos[v][1] + sign * vec[1]};
      if (!placed[other]) {
        pos[other] = p;
        placed[other] = true;
        frontier.push(other);
      } else if (std::abs(pos[other][0] - p[0]) > kTol ||
                 std::abs(pos[other][1] - p[1]) > kTol) {
        throw std::runtime_error("embedding is inconsistent");
      }
    }
  }
  for (bool p : placed)
    if (!p) throw std::runtime_error("embedding: disconnected vertex");
  return pos;
}

std::string render_svg(const TilingComplex& c) {
  auto pos = embed_vertices(c);
  double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;
  for (const auto& p : pos) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  double margin = 0.06 * std::max(xmax - xmin, ymax - ymin) + 0.02;
  double w = xmax - xmin + 2 * margin;
  double h = ymax - ymin + 2 * margin;
  // Flip y so counterclockwise combinatorics renders counterclockwise.
  auto px = [&](double x) { return x - xmin + margin; };
  auto py = [&](double y) { return ymax - y + margin; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\" width=\"480\" "
      << "height=\"" << fmt(480.0 * h / w) << "\">\n";
  for (const auto& f : c.faces) {
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < f.boundary.size(); ++i) {
      int v = c.dart_tail(f.boundary[i]);
      if (i) out << " ";
      out << fmt(px(pos[v][0])) << "," << fmt(py(pos[v][1]));
    }
    out << "\" fill=\"" << fill_for(f.boundary.size())
        << "\" stroke=\"#333333\" stroke-width=\"0.015\" "
        << "stroke-linejoin=\"round\"/>\n";
  }
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    if (!c.edge_on_boundary(static_cast<int>(e))) continue;
    out << "  <line x1=\"" << fmt(px(pos[c.edges[e].tail][0])) << "\" y1=\""
        << fmt(py(pos[c.edges[e].tail][1])) << "\" x2=\""
        << fmt(px(pos[c.edges[e].head][0])) << "\" y2=\""
        << fmt(py(pos[c.edges[e].head][1]))
        << "\" stroke=\"#000000\" stroke-width=\"0.03\" "
        << "stroke-linecap=\"round\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace zonogon
