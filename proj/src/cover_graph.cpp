#include "kiss4d/cover_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace kiss4d {

bool covers(const R4Point& p1, const R4Point& p2, double tol) {
  if (chord_s3(p1, p2) < 1.0 - tol) {
    throw PreconditionError("covers: points do not kiss");
  }
  return (p1 + p2).norm() < 1.0 - tol;
}

CoverGraph::CoverGraph(std::size_t n) : adjacency_(n, 0), labels_(n) {
  if (n > kMaxVertices) throw DomainError("CoverGraph: too many vertices");
  std::iota(labels_.begin(), labels_.end(), std::size_t{0});
}

CoverGraph::CoverGraph(std::vector<std::size_t> labels)
    : adjacency_(labels.size(), 0), labels_(std::move(labels)) {
  if (labels_.size() > kMaxVertices) throw DomainError("CoverGraph: too many vertices");
}

void CoverGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw DomainError("CoverGraph: vertex out of range");
  if (u == v) throw DomainError("CoverGraph: loops are not allowed");
  adjacency_[u] |= std::uint64_t{1} << v;
  adjacency_[v] |= std::uint64_t{1} << u;
}

bool CoverGraph::adjacent(std::size_t u, std::size_t v) const {
  return (adjacency_.at(u) >> v) & 1;
}

std::size_t CoverGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::popcount(adjacency_.at(v)));
}

std::vector<std::size_t> CoverGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::size_t CoverGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto mask : adjacency_) twice += static_cast<std::size_t>(std::popcount(mask));
  return twice / 2;
}

std::vector<IndexPair> CoverGraph::edges() const {
  std::vector<IndexPair> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool CoverGraph::is_triangle_free() const {
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v) && (adjacency_[u] & adjacency_[v]) != 0) return false;
    }
  }
  return true;
}

bool CoverGraph::is_independent(std::uint64_t vertex_mask) const {
  for (std::size_t v = 0; v < size(); ++v) {
    if (((vertex_mask >> v) & 1) && (adjacency_[v] & vertex_mask) != 0) return false;
  }
  return true;
}

CoverGraph build_cover_graph(const Configuration& c, double tol) {
  if (!verify_kissing(c, tol).is_kissing) {
    throw PreconditionError("build_cover_graph: configuration is not kissing");
  }
  CoverGraph g(singletons(c));
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (covers(c[g.label(u)], c[g.label(v)], tol)) g.add_edge(u, v);
    }
  }
  if (!g.is_triangle_free()) {
    throw InconsistencyError("build_cover_graph: cover graph contains a triangle");
  }
  return g;
}

namespace {

constexpr std::size_t kMaxCodeVertices = 11;  // 55 upper-triangle bits

// Bit index of edge (i, j), i < j, in the upper-triangle code. Earlier rows are more significant
// so that comparing codes compares the adjacency rows lexicographically.
std::size_t edge_bit(std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t total = n * (n - 1) / 2;
  const std::size_t row_start = i * n - i * (i + 1) / 2;
  return total - 1 - (row_start + (j - i - 1));
}

std::uint64_t code_under(const CoverGraph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << edge_bit(n, i, j);
    }
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const CoverGraph& g) {
  const std::size_t n = g.size();
  if (n > kMaxCodeVertices) throw DomainError("canonical_code: graph too large");
  if (n < 2) return 0;

  // Vertices are ordered by non-increasing degree; only orders within equal-degree blocks vary.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start;
    while (end < n && g.degree(order[end]) == g.degree(order[start])) ++end;
    blocks.emplace_back(start, end);
    start = end;
  }

  std::uint64_t best = code_under(g, order);
  // Odometer over the permutations of every block.
  for (;;) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
    best = std::min(best, code_under(g, order));
  }
  return best;
}

CoverGraph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > kMaxCodeVertices) throw DomainError("graph_from_code: graph too large");
  CoverGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((code >> edge_bit(n, i, j)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<CoverGraph> enumerate_admissible_graphs(std::size_t n, std::optional<std::size_t> degree) {
  if (n > kMaxEnumerationVertices) {
    throw DomainError("enumerate_admissible_graphs: n = " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxEnumerationVertices));
  }
  if (n == 0) {
    if (degree && *degree != 0) return {};
    return {CoverGraph(0)};
  }

  // Every triangle-free graph on k + 1 vertices is a triangle-free graph on k vertices plus one
  // vertex whose neighborhood is an independent set, so extending class representatives that way
  // reaches every class.
  std::vector<CoverGraph> reps{CoverGraph(1)};
  for (std::size_t k = 1; k < n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<CoverGraph> next;
    for (const auto& base : reps) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        if (!base.is_independent(mask)) continue;
        CoverGraph g(k + 1);
        for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
        for (std::size_t u = 0; u < k; ++u) {
          if ((mask >> u) & 1) g.add_edge(u, k);
        }
        const auto code = canonical_code(g);
        if (seen.insert(code).second) next.push_back(graph_from_code(k + 1, code));
      }
    }
    reps = std::move(next);
  }

  std::vector<std::pair<std::uint64_t, CoverGraph>> keyed;
  for (auto& g : reps) {
    if (degree) {
      bool regular = true;
      for (std::size_t v = 0; v < g.size(); ++v) regular = regular && g.degree(v) == *degree;
      if (!regular) continue;
    }
    keyed.emplace_back(canonical_code(g), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CoverGraph> out;
  for (auto& [code, g] : keyed) out.push_back(std::move(g));
  return out;
}

namespace {

void require_vertex(const CoverGraph& g, std::size_t v, const Configuration& c) {
  if (v >= g.size()) throw DomainError("transform: vertex out of range");
  for (auto label : g.labels()) {
    if (label >= c.size()) throw DomainError("transform: graph label outside configuration");
  }
}

Configuration checked(Configuration result, const char* rule) {
  if (!verify_kissing(result).is_kissing) {
    throw InconsistencyError(std::string(rule) + ": result is not kissing");
  }
  return result;
}

// Drop the points with the given labels, then append the antipodes of the kept ones listed.
Configuration drop_and_complete(const Configuration& c, const std::vector<std::size_t>& drop,
                                const std::vector<std::size_t>& complete) {
  std::vector<R4Point> points;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) points.push_back(c[i]);
  }
  for (auto i : complete) points.push_back(-c[i]);
  return Configuration(std::move(points));
}

}  // namespace

Configuration transform_t1(const Configuration& c, const CoverGraph& g, std::size_t v) {
  require_vertex(g, v, c);
  if (g.degree(v) != 0) throw PreconditionError("T1: vertex has bonds");
  return checked(add_antipode(c, g.label(v)), "T1");
}

Configuration transform_t2(const Configuration& c, const CoverGraph& g, std::size_t v) {
  require_vertex(g, v, c);
  if (g.degree(v) != 1) throw PreconditionError("T2: vertex degree is not 1");
  const std::size_t neighbor = g.label(g.neighbors(v).front());
  return checked(drop_and_complete(c, {neighbor}, {g.label(v)}), "T2");
}

Configuration transform_t3(const Configuration& c, const CoverGraph& g, std::size_t v) {
  require_vertex(g, v, c);
  const std::size_t n = g.size();
  if (n % 2 != 0) throw PreconditionError("T3: singleton count is odd");
  if (g.degree(v) != n / 2) throw PreconditionError("T3: vertex degree is not n/2");
  std::vector<std::size_t> drop;
  std::vector<std::size_t> complete;
  for (std::size_t u = 0; u < n; ++u) {
    (g.adjacent(v, u) ? complete : drop).push_back(g.label(u));
  }
  return checked(drop_and_complete(c, drop, complete), "T3");
}

}  // namespace kiss4d
