#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kiss4d/configuration.hpp"

namespace kiss4d {

/// p1 is in the cover set of p2 when the antipode of p1 would overlap p2, i.e. |p1 + p2| < 1 - tol.
/// Both points must already kiss (chord >= 1 - tol). Boundary contacts do not cover.
bool covers(const R4Point& p1, const R4Point& p2, double tol = tol::kKissing);

/// Simple undirected graph on at most 64 vertices. Vertex v carries a label, which for cover
/// graphs is the index of the singleton in its configuration.
class CoverGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  CoverGraph() = default;
  explicit CoverGraph(std::size_t n);
  explicit CoverGraph(std::vector<std::size_t> labels);

  std::size_t size() const noexcept { return adjacency_.size(); }
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }
  std::size_t label(std::size_t v) const { return labels_.at(v); }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::uint64_t neighbor_mask(std::size_t v) const { return adjacency_.at(v); }
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v, lexicographic.
  std::vector<IndexPair> edges() const;

  bool is_triangle_free() const;
  bool is_independent(std::uint64_t vertex_mask) const;

  bool operator==(const CoverGraph&) const = default;

 private:
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::size_t> labels_;
};

/// Cover graph on the unpaired singletons of a kissing configuration.
CoverGraph build_cover_graph(const Configuration& c, double tol = tol::kKissing);

/// Canonical code of a graph with at most 11 vertices: the lexicographically smallest upper-triangle
/// adjacency bit string over vertex orders that list vertices by non-increasing degree.
std::uint64_t canonical_code(const CoverGraph& g);

/// Rebuild the graph whose canonical code on n vertices is `code`.
CoverGraph graph_from_code(std::size_t n, std::uint64_t code);

inline constexpr std::size_t kMaxEnumerationVertices = 8;

/// All triangle-free simple graphs on n vertices up to isomorphism, sorted by canonical code.
/// With a degree constraint only graphs in which every vertex has exactly that degree are kept.
std::vector<CoverGraph> enumerate_admissible_graphs(std::size_t n,
                                                    std::optional<std::size_t> degree = std::nullopt);

/// T1: v has no bonds, so its antipode can be added.
Configuration transform_t1(const Configuration& c, const CoverGraph& g, std::size_t v);

/// T2: v has exactly one bond; drop the neighbor, then add the antipode of v.
Configuration transform_t2(const Configuration& c, const CoverGraph& g, std::size_t v);

/// T3: v has exactly n/2 bonds; drop every singleton outside cov(v) and add antipodes to cov(v).
Configuration transform_t3(const Configuration& c, const CoverGraph& g, std::size_t v);

}  // namespace kiss4d
