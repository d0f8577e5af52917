#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kiss4d/configuration.hpp"
#include "kiss4d/cover_graph.hpp"

namespace kiss4d {

inline constexpr std::string_view kPointsFormat = "kiss4d-v1";
inline constexpr std::string_view kFiberedFormat = "kiss4d-fibered-v1";

/// A configuration file: either raw R^4 points or circles with fiber angles (radians).
/// Points are kept as written; unit norm is checked when converting to a Configuration.
struct ConfigDocument {
  enum class Format { Points, Fibered };

  Format format = Format::Points;
  std::string name;
  std::optional<double> tolerance;
  std::vector<R4Point> points;
  FiberedConfiguration fibered;
  std::optional<CoverGraph> cover_graph;  // vertex labels index into the point list

  std::size_t point_count() const;
};

ConfigDocument parse_document(std::string_view text);

/// Canonical text: fixed key order, 17 significant digits, trailing newline.
std::string emit_document(const ConfigDocument& doc);

ConfigDocument make_document(const Configuration& c, std::string name = {});
ConfigDocument make_document(const FiberedConfiguration& f, std::string name = {});

/// Points of the document as a validated configuration; fibered documents are lifted.
Configuration to_configuration(const ConfigDocument& doc);

}  // namespace kiss4d
