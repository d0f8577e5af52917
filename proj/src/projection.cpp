#include "kiss4d/projection.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

namespace kiss4d {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return std::string(buf) == "-0.000000" ? "0.000000" : buf;
}

Eigen::Vector2d drop_axes(const R4Point& p, Plane plane) { return {p(plane.u), p(plane.v)}; }

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

Plane parse_plane(std::string_view name) {
  if (name.size() == 4 && name[0] == 'x' && name[2] == 'x') {
    const int u = name[1] - '1';
    const int v = name[3] - '1';
    if (u >= 0 && v >= 0 && u < 4 && v < 4 && u < v) return Plane{u, v};
  }
  throw DomainError("invalid projection plane '" + std::string(name) + "' (expected x1x2 ... x3x4)");
}

std::string plane_name(Plane plane) {
  return "x" + std::to_string(plane.u + 1) + "x" + std::to_string(plane.v + 1);
}

ProjectionPlot project_orthographic(const Configuration& c, Plane plane) {
  if (!(plane.u >= 0 && plane.v < 4 && plane.u < plane.v)) throw DomainError("invalid projection plane");
  ProjectionPlot plot;
  plot.plane = plane;
  for (const auto& p : c) plot.vertices.push_back(drop_axes(p, plane));
  plot.circle_of.assign(c.size(), 0);

  const auto fibered = group_into_circles(c);
  for (std::size_t k = 0; k < fibered.circles.size(); ++k) {
    const auto& circle = fibered.circles[k];
    std::vector<std::size_t> order(circle.members.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return circle.thetas[a] < circle.thetas[b]; });
    for (auto m : circle.members) plot.circle_of[m] = k;
    if (order.size() == 2) {
      plot.circle_edges.emplace_back(std::minmax(circle.members[order[0]], circle.members[order[1]]));
    } else if (order.size() > 2) {
      for (std::size_t i = 0; i < order.size(); ++i) {
        const auto a = circle.members[order[i]];
        const auto b = circle.members[order[(i + 1) % order.size()]];
        plot.circle_edges.emplace_back(std::minmax(a, b));
      }
    }
    std::vector<Eigen::Vector2d> outline;
    for (int s = 0; s <= kOutlineSamples; ++s) {
      const double theta = 2 * std::numbers::pi * s / kOutlineSamples;
      outline.push_back(drop_axes(hopf_lift(circle.base, theta), plane));
    }
    plot.outlines.push_back(std::move(outline));
  }
  std::sort(plot.circle_edges.begin(), plot.circle_edges.end());
  plot.neighbor_edges = contact_pairs(c, 1.0 - kNeighborBelow, 1.0 + kNeighborAbove);
  return plot;
}

std::string render_svg(const ProjectionPlot& plot) {
  constexpr double kPanel = 400, kMargin = 20, kScale = (kPanel - 2 * kMargin) / 2;
  auto sx = [&](double x, int panel) { return fixed(panel * kPanel + kPanel / 2 + kScale * x); };
  auto sy = [&](double y) { return fixed(kPanel / 2 - kScale * y); };
  auto color = [&](std::size_t circle) { return kPalette[circle % kPalette.size()]; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kPanel << "\" height=\"" << kPanel
      << "\" viewBox=\"0 0 " << 2 * kPanel << " " << kPanel << "\">\n";
  out << "  <title>orthographic projection onto " << plane_name(plot.plane) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << 2 * kPanel << "\" height=\"" << kPanel
      << "\" fill=\"white\"/>\n";

  out << "  <g id=\"circles\" fill=\"none\" stroke-width=\"1\">\n";
  for (const auto& outline : plot.outlines) {
    out << "    <polyline stroke=\"#bbbbbb\" points=\"";
    for (std::size_t s = 0; s < outline.size(); ++s) {
      out << (s ? " " : "") << sx(outline[s].x(), 0) << "," << sy(outline[s].y());
    }
    out << "\"/>\n";
  }
  for (const auto& [a, b] : plot.circle_edges) {
    out << "    <line x1=\"" << sx(plot.vertices[a].x(), 0) << "\" y1=\"" << sy(plot.vertices[a].y())
        << "\" x2=\"" << sx(plot.vertices[b].x(), 0) << "\" y2=\"" << sy(plot.vertices[b].y())
        << "\" stroke=\"" << color(plot.circle_of[a]) << "\" stroke-width=\"2\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"neighbors\" stroke=\"#444444\" stroke-width=\"1\">\n";
  for (const auto& [a, b] : plot.neighbor_edges) {
    out << "    <line x1=\"" << sx(plot.vertices[a].x(), 1) << "\" y1=\"" << sy(plot.vertices[a].y())
        << "\" x2=\"" << sx(plot.vertices[b].x(), 1) << "\" y2=\"" << sy(plot.vertices[b].y()) << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"points\">\n";
  for (std::size_t i = 0; i < plot.vertices.size(); ++i) {
    for (int panel = 0; panel < 2; ++panel) {
      out << "    <circle cx=\"" << sx(plot.vertices[i].x(), panel) << "\" cy=\"" << sy(plot.vertices[i].y())
          << "\" r=\"4\" fill=\"" << color(plot.circle_of[i]) << "\"/>\n";
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string render_csv(const ProjectionPlot& plot) {
  std::ostringstream out;
  out << "kind,i,j,x,y,circle\n";
  for (std::size_t i = 0; i < plot.vertices.size(); ++i) {
    out << "vertex," << i << ",," << fixed(plot.vertices[i].x()) << "," << fixed(plot.vertices[i].y()) << ","
        << plot.circle_of[i] << "\n";
  }
  for (const auto& [a, b] : plot.circle_edges) {
    out << "circle_edge," << a << "," << b << ",,," << plot.circle_of[a] << "\n";
  }
  for (const auto& [a, b] : plot.neighbor_edges) out << "neighbor_edge," << a << "," << b << ",,,\n";
  for (std::size_t k = 0; k < plot.outlines.size(); ++k) {
    for (std::size_t s = 0; s < plot.outlines[k].size(); ++s) {
      out << "outline," << s << ",," << fixed(plot.outlines[k][s].x()) << "," << fixed(plot.outlines[k][s].y())
          << "," << k << "\n";
    }
  }
  return out.str();
}

}  // namespace kiss4d
