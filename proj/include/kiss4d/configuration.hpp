#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kiss4d/hopf.hpp"

namespace kiss4d {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Ordered set of distinct unit vectors of R^4: the contact points of a candidate
/// kissing arrangement. Construction validates unit norm and distinctness.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<R4Point> points, double norm_tol = tol::kConstructed,
                         double duplicate_tol = tol::kOracle);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const R4Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<R4Point>& points() const noexcept { return points_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  Configuration without(std::size_t index) const;
  Configuration without(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<R4Point> points_;
};

struct Circle {
  S2Point<double> base;
  std::vector<double> thetas;
  // Indices of the source points when produced by group_into_circles; empty otherwise.
  std::vector<std::size_t> members;
};

/// Circles on S^2, each carrying the fiber angles of its points.
struct FiberedConfiguration {
  std::vector<Circle> circles;

  std::size_t point_count() const;
  std::vector<R4Point> lift_points() const;
  Configuration lift() const;
};

/// Multiset of circle sizes. Printed largest circle first, e.g. "6x4" or "9x2+6x1".
class Signature {
 public:
  using Counts = std::map<std::size_t, std::size_t, std::greater<>>;

  Signature() = default;
  explicit Signature(Counts counts);

  const Counts& counts() const noexcept { return counts_; }
  std::size_t total() const noexcept { return total_; }
  std::size_t count_of(std::size_t circle_size) const;
  std::string to_string() const;

  bool operator==(const Signature&) const = default;

 private:
  Counts counts_;
  std::size_t total_ = 0;
};

class Rotation4 {
 public:
  Rotation4() : matrix_(Eigen::Matrix4d::Identity()) {}
  explicit Rotation4(const Eigen::Matrix4d& m, double tol = 1e-10);

  const Eigen::Matrix4d& matrix() const noexcept { return matrix_; }
  R4Point operator*(const R4Point& p) const { return matrix_ * p; }

 private:
  Eigen::Matrix4d matrix_;
};

struct VerificationReport {
  bool is_kissing = true;
  double min_distance = 2.0;  // 2 when there are fewer than two points
  IndexPair argmin_pair{0, 0};
  std::vector<std::pair<IndexPair, double>> violations;
};

VerificationReport verify_kissing(const Configuration& c, double tol = tol::kKissing);

/// Pairs whose chord lies in [lo, hi].
std::vector<IndexPair> contact_pairs(const Configuration& c, double lo, double hi);

FiberedConfiguration group_into_circles(const Configuration& c, double tol = tol::kCircle);

Signature signature(const FiberedConfiguration& f);
Signature signature(const Configuration& c, double tol = tol::kCircle);

std::vector<IndexPair> antipodal_pairs(const Configuration& c, double tol = tol::kOracle);

/// Indices not belonging to any antipodal pair, ascending.
std::vector<std::size_t> singletons(const Configuration& c, double tol = tol::kOracle);

Rotation4 random_rotation(std::uint64_t seed);
Configuration apply_rotation(const Configuration& c, const Rotation4& r);

Signature irreducible_signature(const Configuration& c, std::uint64_t seed,
                                double tol = tol::kCircle);

FiberedConfiguration shift_all_angles(const FiberedConfiguration& f, double shift);

Configuration add_antipode(const Configuration& c, std::size_t index);

struct AntipodeExtension {
  bool kisses_paired = true;      // holds for every kissing input
  bool kisses_singletons = true;  // may fail
  double min_to_paired = 2.0;
  double min_to_singletons = 2.0;
  std::vector<std::size_t> blocking;  // singletons the antipode would overlap
};

AntipodeExtension antipode_extension_check(const Configuration& c, std::size_t singleton,
                                           double tol = tol::kKissing);

/// 64-bit mixer used to derive independent seeds from a master seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace kiss4d
