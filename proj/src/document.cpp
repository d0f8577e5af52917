#include "kiss4d/document.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace kiss4d {

namespace {

using nlohmann::json;

std::string number(double v) {
  if (v == 0 && std::signbit(v)) return "-0.0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// Line of the first occurrence of a key, for diagnostics on parsed values.
int line_of_key(std::string_view text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  return pos == std::string_view::npos ? 0 : line_at(text, pos);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message, const std::string& key, const std::string& field) const {
    throw ParseError(message, line_of_key(text_, key), field);
  }

  double real(const json& v, const std::string& key, const std::string& field) const {
    if (!v.is_number()) fail("expected a number", key, field);
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail("number is not finite", key, field);
    return x;
  }

  std::size_t count(const json& v, const std::string& key, const std::string& field) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      fail("expected a non-negative integer", key, field);
    }
    return v.get<std::size_t>();
  }

  const json& array(const json& obj, const std::string& key, const std::string& field) const {
    if (!obj.contains(key)) fail("missing field", key, field);
    const json& v = obj.at(key);
    if (!v.is_array()) fail("expected an array", key, field);
    return v;
  }

 private:
  std::string_view text_;
};

}  // namespace

std::size_t ConfigDocument::point_count() const {
  return format == Format::Points ? points.size() : fibered.point_count();
}

ConfigDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_at(text, e.byte == 0 ? 0 : e.byte - 1), "");
  } catch (const json::exception& e) {
    // Number overflow: the message quotes the offending literal, so locate it in the text.
    const std::string what = e.what();
    const auto open = what.find('\'');
    const auto close = what.rfind('\'');
    std::size_t at = 0;
    if (open != std::string::npos && close > open) {
      at = text.find(what.substr(open + 1, close - open - 1));
      if (at == std::string_view::npos) at = 0;
    }
    throw ParseError(what, line_at(text, at), "");
  }
  Reader reader(text);
  if (!root.is_object()) throw ParseError("document must be a JSON object", 1, "");

  ConfigDocument doc;
  if (!root.contains("format") || !root.at("format").is_string()) {
    reader.fail("missing or non-string format tag", "format", "format");
  }
  const auto tag = root.at("format").get<std::string>();
  if (tag == kPointsFormat) {
    doc.format = ConfigDocument::Format::Points;
  } else if (tag == kFiberedFormat) {
    doc.format = ConfigDocument::Format::Fibered;
  } else {
    reader.fail("unknown format '" + tag + "'", "format", "format");
  }

  if (root.contains("name")) {
    if (!root.at("name").is_string()) reader.fail("expected a string", "name", "name");
    doc.name = root.at("name").get<std::string>();
  }
  if (root.contains("tolerance")) {
    doc.tolerance = reader.real(root.at("tolerance"), "tolerance", "tolerance");
    if (!(*doc.tolerance >= 0)) reader.fail("tolerance must be non-negative", "tolerance", "tolerance");
  }

  const bool has_points = root.contains("points");
  const bool has_circles = root.contains("circles");
  if (has_points == has_circles) {
    reader.fail("exactly one of 'points' and 'circles' must be present", has_points ? "circles" : "format",
                "points/circles");
  }
  if (doc.format == ConfigDocument::Format::Points && !has_points) {
    reader.fail("points format requires 'points'", "circles", "points");
  }
  if (doc.format == ConfigDocument::Format::Fibered && !has_circles) {
    reader.fail("fibered format requires 'circles'", "points", "circles");
  }

  if (has_points) {
    const json& pts = reader.array(root, "points", "points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string field = "points[" + std::to_string(i) + "]";
      if (!pts[i].is_array() || pts[i].size() != 4) reader.fail("expected 4 coordinates", "points", field);
      R4Point p;
      for (int k = 0; k < 4; ++k) {
        p(k) = reader.real(pts[i][static_cast<std::size_t>(k)], "points", field + "[" + std::to_string(k) + "]");
      }
      doc.points.push_back(p);
    }
  } else {
    const json& circles = reader.array(root, "circles", "circles");
    for (std::size_t i = 0; i < circles.size(); ++i) {
      const std::string field = "circles[" + std::to_string(i) + "]";
      const json& c = circles[i];
      if (!c.is_object()) reader.fail("expected an object", "circles", field);
      for (const char* key : {"alpha", "phi"}) {
        if (!c.contains(key)) reader.fail(std::string("missing ") + key, "circles", field + "." + key);
      }
      const double alpha = reader.real(c.at("alpha"), "alpha", field + ".alpha");
      const double phi = reader.real(c.at("phi"), "phi", field + ".phi");
      Circle circle{S2Point<double>::polar(alpha, phi), {}, {}};
      const json& thetas = reader.array(c, "thetas", field + ".thetas");
      if (thetas.empty()) reader.fail("circle has no fiber angles", "thetas", field + ".thetas");
      for (std::size_t k = 0; k < thetas.size(); ++k) {
        circle.thetas.push_back(reader.real(thetas[k], "thetas", field + ".thetas[" + std::to_string(k) + "]"));
      }
      if (c.contains("count") &&
          reader.count(c.at("count"), "count", field + ".count") != circle.thetas.size()) {
        reader.fail("count does not match the number of fiber angles", "count", field + ".count");
      }
      doc.fibered.circles.push_back(std::move(circle));
    }
  }

  if (root.contains("count") && reader.count(root.at("count"), "count", "count") != doc.point_count()) {
    reader.fail("count does not match the number of points", "count", "count");
  }

  if (root.contains("cover_graph")) {
    const json& g = root.at("cover_graph");
    if (!g.is_object()) reader.fail("expected an object", "cover_graph", "cover_graph");
    const json& vertices = reader.array(g, "vertices", "cover_graph.vertices");
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const auto label = reader.count(vertices[i], "vertices", "cover_graph.vertices[" + std::to_string(i) + "]");
      if (label >= doc.point_count()) reader.fail("vertex label out of range", "vertices", "cover_graph.vertices");
      labels.push_back(label);
    }
    if (labels.size() > CoverGraph::kMaxVertices) reader.fail("too many vertices", "vertices", "cover_graph.vertices");
    CoverGraph graph(labels);
    const json& edges = reader.array(g, "edges", "cover_graph.edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string field = "cover_graph.edges[" + std::to_string(i) + "]";
      if (!edges[i].is_array() || edges[i].size() != 2) reader.fail("expected a pair", "edges", field);
      std::size_t ends[2];
      for (std::size_t k = 0; k < 2; ++k) {
        const auto label = reader.count(edges[i][k], "edges", field);
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) reader.fail("edge endpoint is not a vertex", "edges", field);
        ends[k] = static_cast<std::size_t>(it - labels.begin());
      }
      if (ends[0] == ends[1]) reader.fail("loop edge", "edges", field);
      graph.add_edge(ends[0], ends[1]);
    }
    doc.cover_graph = std::move(graph);
  }
  return doc;
}

std::string emit_document(const ConfigDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"" << (doc.format == ConfigDocument::Format::Points ? kPointsFormat : kFiberedFormat)
      << "\",\n";
  if (!doc.name.empty()) out << "  \"name\": " << json(doc.name).dump() << ",\n";
  if (doc.tolerance) out << "  \"tolerance\": " << number(*doc.tolerance) << ",\n";
  out << "  \"count\": " << doc.point_count() << ",\n";

  if (doc.format == ConfigDocument::Format::Points) {
    out << "  \"points\": [";
    for (std::size_t i = 0; i < doc.points.size(); ++i) {
      const auto& p = doc.points[i];
      out << (i ? ",\n    " : "\n    ") << "[" << number(p(0)) << ", " << number(p(1)) << ", "
          << number(p(2)) << ", " << number(p(3)) << "]";
    }
    out << (doc.points.empty() ? "]" : "\n  ]");
  } else {
    out << "  \"circles\": [";
    for (std::size_t i = 0; i < doc.fibered.circles.size(); ++i) {
      const auto& c = doc.fibered.circles[i];
      out << (i ? ",\n    " : "\n    ") << "{\"alpha\": " << number(c.base.alpha) << ", \"phi\": "
          << number(c.base.phi) << ", \"count\": " << c.thetas.size() << ", \"thetas\": [";
      for (std::size_t k = 0; k < c.thetas.size(); ++k) out << (k ? ", " : "") << number(c.thetas[k]);
      out << "]}";
    }
    out << (doc.fibered.circles.empty() ? "]" : "\n  ]");
  }

  if (doc.cover_graph) {
    const auto& g = *doc.cover_graph;
    out << ",\n  \"cover_graph\": {\"vertices\": [";
    for (std::size_t v = 0; v < g.size(); ++v) out << (v ? ", " : "") << g.label(v);
    out << "], \"edges\": [";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
      out << (first ? "" : ", ") << "[" << g.label(u) << ", " << g.label(v) << "]";
      first = false;
    }
    out << "]}";
  }
  out << "\n}\n";
  return out.str();
}

ConfigDocument make_document(const Configuration& c, std::string name) {
  ConfigDocument doc;
  doc.format = ConfigDocument::Format::Points;
  doc.name = std::move(name);
  doc.points = c.points();
  return doc;
}

ConfigDocument make_document(const FiberedConfiguration& f, std::string name) {
  ConfigDocument doc;
  doc.format = ConfigDocument::Format::Fibered;
  doc.name = std::move(name);
  doc.fibered = f;
  for (auto& circle : doc.fibered.circles) circle.members.clear();
  return doc;
}

Configuration to_configuration(const ConfigDocument& doc) {
  if (doc.format == ConfigDocument::Format::Fibered) return doc.fibered.lift();
  return Configuration(doc.points);
}

}  // namespace kiss4d
