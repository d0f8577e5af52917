#include "kiss4d/classify.hpp"

#include <bit>
#include <map>
#include <optional>
#include <sstream>

#include "kiss4d/cover_graph.hpp"
#include "kiss4d/errors.hpp"

namespace kiss4d {

namespace {

constexpr int kKissingNumber = 24;
constexpr int kMaxPairs = 12;

const char* kCiteKissing = "kissing number in four dimensions is 24";
const char* kCiteUnique = "the unique antipodal 24-point kissing configuration is the 24-cell";
const char* kCiteSubset = "a subset of a kissing configuration is kissing";
const char* kCiteLemma = "antipode of a singleton kisses every antipodal pair";
const char* kCiteAntitransitive = "cover relation is symmetric and antitransitive";

std::string shape(int pairs, int singles) {
  return std::to_string(pairs) + "x2+" + std::to_string(singles) + "x1";
}

std::string edge_list(const CoverGraph& g) {
  std::ostringstream out;
  out << "graph on " << g.size() << " vertices {";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : " ") << u << "-" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

// Returns the color-class masks of a 2-coloring when g is bipartite; per component the larger side
// goes into the first mask.
std::optional<std::pair<std::uint64_t, std::uint64_t>> bipartition(const CoverGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> color(n, -1);
  std::uint64_t big = 0, small = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    std::vector<std::size_t> stack{root};
    std::uint64_t side[2] = {0, 0};
    color[root] = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      side[color[v]] |= std::uint64_t{1} << v;
      for (auto u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
    const bool first_larger = std::popcount(side[0]) >= std::popcount(side[1]);
    big |= first_larger ? side[0] : side[1];
    small |= first_larger ? side[1] : side[0];
  }
  return std::make_pair(big, small);
}

using Chain = std::vector<RuleStep>;

class Engine {
 public:
  std::optional<Chain> prove(int pairs, int singles, int depth);
  std::optional<Chain> close_graph(int pairs, int singles, const CoverGraph& g, int depth);

 private:
  std::optional<Chain> closed_state(int pairs, int singles, bool discarded, int depth);

  std::map<std::pair<int, int>, std::optional<Chain>> memo_;
};

// Shift a memoized chain to a new depth.
Chain at_depth(const Chain& chain, int depth) {
  Chain out = chain;
  if (out.empty()) return out;
  const int base = out.front().depth;
  for (auto& step : out) step.depth = step.depth - base + depth;
  return out;
}

std::optional<Chain> Engine::closed_state(int pairs, int singles, bool discarded, int depth) {
  if (singles == 0 && pairs > kMaxPairs) {
    return Chain{{depth, "A2", kCiteKissing,
                  std::to_string(pairs) + " antipodal pairs exceed the " +
                      std::to_string(kMaxPairs) + "-pair maximum"}};
  }
  if (2 * pairs + singles > kKissingNumber) {
    return Chain{{depth, "A1", kCiteKissing,
                  shape(pairs, singles) + " has " + std::to_string(2 * pairs + singles) +
                      " points"}};
  }
  if (singles == 0 && pairs == kMaxPairs && discarded) {
    return Chain{{depth, "A3", kCiteUnique,
                  "a 12x2 configuration reached after discarding a sphere contradicts uniqueness"}};
  }
  if (singles >= 1) return prove(pairs, singles, depth);
  return std::nullopt;
}

std::optional<Chain> Engine::close_graph(int pairs, int singles, const CoverGraph& g, int depth) {
  const auto n = static_cast<std::size_t>(singles);
  auto attempt = [&](const std::string& rule, const std::string& cite, const std::string& detail,
                     int to_pairs, int to_singles, bool discarded) -> std::optional<Chain> {
    auto sub = closed_state(to_pairs, to_singles, discarded, depth + 1);
    if (!sub) return std::nullopt;
    Chain chain{{depth, rule, cite, detail + " -> " + shape(to_pairs, to_singles)}};
    chain.insert(chain.end(), sub->begin(), sub->end());
    return chain;
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      if (auto c = attempt("T1", kCiteLemma, "pair unbonded vertex " + std::to_string(v),
                           pairs + 1, singles - 1, false)) {
        return c;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      if (auto c = attempt("T2", kCiteLemma,
                           "drop neighbor of vertex " + std::to_string(v) + ", pair it",
                           pairs + 1, singles - 2, true)) {
        return c;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto k = static_cast<int>(g.degree(v));
    if (k >= 1 && 2 * g.degree(v) >= n) {
      if (auto c = attempt("T3", kCiteAntitransitive,
                           "keep cov(" + std::to_string(v) + ") of size " + std::to_string(k) +
                               ", pair it",
                           pairs + k, 0, static_cast<int>(n) > k)) {
        return c;
      }
    }
  }
  if (auto classes = bipartition(g); classes && g.edge_count() > 0) {
    const int k = std::popcount(classes->first);
    const bool balanced = k == std::popcount(classes->second);
    std::string detail = "drop one color class, pair the other (size " + std::to_string(k) + ")";
    if (balanced) detail += "; either class gives a distinct completion";
    if (auto c = attempt("T4", kCiteAntitransitive, detail, pairs + k, 0, static_cast<int>(n) > k)) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Chain> Engine::prove(int pairs, int singles, int depth) {
  const auto key = std::make_pair(pairs, singles);
  if (auto it = memo_.find(key); it != memo_.end()) {
    if (!it->second) return std::nullopt;
    return at_depth(*it->second, depth);
  }

  std::optional<Chain> result;
  if (2 * pairs + singles > kKissingNumber) {
    result = closed_state(pairs, singles, false, depth);
  } else if (singles >= 1) {
    if (auto sub = closed_state(pairs, singles - 1, false, depth + 1)) {
      Chain chain{{depth, "R", kCiteSubset,
                   "drop a singleton: " + shape(pairs, singles) + " -> " +
                       shape(pairs, singles - 1)}};
      chain.insert(chain.end(), sub->begin(), sub->end());
      result = std::move(chain);
    } else if (static_cast<std::size_t>(singles) <= kMaxEnumerationVertices) {
      Chain chain;
      bool all_closed = true;
      for (const auto& g : enumerate_admissible_graphs(static_cast<std::size_t>(singles))) {
        auto sub = close_graph(pairs, singles, g, depth + 1);
        if (!sub) {
          all_closed = false;
          break;
        }
        chain.push_back({depth, "case", kCiteAntitransitive,
                         shape(pairs, singles) + " with cover " + edge_list(g)});
        chain.insert(chain.end(), sub->begin(), sub->end());
      }
      if (all_closed) result = std::move(chain);
    }
  }
  memo_[key] = result;
  if (result) return at_depth(*result, depth);
  return std::nullopt;
}

}  // namespace

std::string Verdict::status_name() const {
  switch (status) {
    case Status::Impossible:
      return "Impossible";
    case Status::Unknown:
      return "Unknown";
    case Status::Established:
      return "Established";
  }
  return "Unknown";
}

std::string Verdict::to_string() const {
  std::ostringstream out;
  out << shape(pairs, singletons) << ": " << status_name() << "\n";
  for (const auto& step : chain) {
    out << std::string(static_cast<std::size_t>(2 * (step.depth + 1)), ' ') << "[" << step.rule
        << "] " << step.detail << "  (" << step.citation << ")\n";
  }
  return out.str();
}

Verdict classify_signature(int pairs, int singles) {
  if (pairs < 0 || singles < 0) throw DomainError("classify_signature: negative count");
  if (2 * pairs + singles > kKissingNumber) {
    throw DomainError("classify_signature: " + shape(pairs, singles) + " exceeds 24 points");
  }
  Verdict verdict;
  verdict.pairs = pairs;
  verdict.singletons = singles;

  if (pairs == kMaxPairs && singles == 0) {
    verdict.status = Verdict::Status::Established;
    verdict.chain.push_back({0, "A3", kCiteUnique, "12x2+0x1 is the 24-cell"});
    return verdict;
  }

  Engine engine;
  if (auto chain = engine.prove(pairs, singles, 0)) {
    verdict.status = Verdict::Status::Impossible;
    verdict.chain = std::move(*chain);
    return verdict;
  }
  verdict.status = Verdict::Status::Unknown;
  if (singles == 0) {
    verdict.chain.push_back({0, "open", kCiteUnique, "pure antipodal configurations below 12 pairs are not refuted"});
  } else if (static_cast<std::size_t>(singles) > kMaxEnumerationVertices) {
    verdict.chain.push_back({0, "open", kCiteAntitransitive, "too many singletons to enumerate cover graphs"});
  } else {
    for (const auto& g : enumerate_admissible_graphs(static_cast<std::size_t>(singles))) {
      if (!engine.close_graph(pairs, singles, g, 1)) {
        verdict.chain.push_back({0, "open", kCiteAntitransitive,
                                 "no rule closes the cover " + edge_list(g)});
        break;
      }
    }
  }
  return verdict;
}

}  // namespace kiss4d
