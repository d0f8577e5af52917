#pragma once

#include <string>
#include <vector>

namespace kiss4d {

/// One step of a deduction. Steps nest by depth: a case split at depth d is closed by the steps
/// at depth d + 1 that follow it.
struct RuleStep {
  int depth = 0;
  std::string rule;      // A1, A2, A3, R, T1, T2, T3, T4, case, open
  std::string citation;  // the fact the step relies on
  std::string detail;    // what the step derives
};

struct Verdict {
  enum class Status { Impossible, Unknown, Established };

  Status status = Status::Unknown;
  int pairs = 0;       // N
  int singletons = 0;  // n
  std::vector<RuleStep> chain;

  std::string status_name() const;
  std::string to_string() const;
};

/// Decide whether an irreducible kissing configuration with N antipodal pairs and n singletons
/// can exist, using a fixed rule set:
///   A1  at most 24 points kiss a central sphere in four dimensions;
///   A2  hence no 13 antipodal pairs;
///   A3  the only 12-pair antipodal configuration is the 24-cell, so reaching 12 pairs after
///       discarding a sphere is contradictory;
///   R   dropping a singleton keeps a kissing configuration;
///   T1  a singleton with no bonds in the cover graph can be paired;
///   T2  a singleton with one bond can be paired after dropping its neighbor;
///   T3  a singleton with at least n/2 bonds: drop the rest, pair its cover set;
///   T4  in a bipartite cover graph, drop one color class and pair the other.
/// Cover graphs are all triangle-free graphs on n vertices (n <= 8); larger n stays Unknown.
Verdict classify_signature(int pairs, int singletons);

}  // namespace kiss4d
