#pragma once

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kiss4d/configuration.hpp"

namespace kiss4d {

/// Coordinate plane kept by an orthographic projection, as zero-based axis indices u < v.
struct Plane {
  int u = 0;
  int v = 1;
};

/// "x1x2", "x3x4", ... Throws DomainError for anything but the six coordinate planes.
Plane parse_plane(std::string_view name);
std::string plane_name(Plane plane);

struct ProjectionPlot {
  Plane plane;
  std::vector<Eigen::Vector2d> vertices;
  std::vector<std::size_t> circle_of;       // circle index per vertex
  std::vector<IndexPair> circle_edges;      // consecutive points around each circle
  std::vector<IndexPair> neighbor_edges;    // chord in [1 - 1e-9, 1 + 1e-6]
  std::vector<std::vector<Eigen::Vector2d>> outlines;  // full fiber of each circle, closed (last point repeats the first)
};

inline constexpr double kNeighborBelow = 1e-9;
inline constexpr double kNeighborAbove = 1e-6;
inline constexpr int kOutlineSamples = 96;

ProjectionPlot project_orthographic(const Configuration& c, Plane plane);

/// Two panels: points joined around their circles over gray fiber outlines, and nearest neighbors.
std::string render_svg(const ProjectionPlot& plot);

/// Header "kind,i,j,x,y,circle"; rows of kind vertex, circle_edge, neighbor_edge and outline.
std::string render_csv(const ProjectionPlot& plot);

}  // namespace kiss4d
