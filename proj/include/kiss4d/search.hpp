#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kiss4d/configuration.hpp"

namespace kiss4d {

struct SearchParams {
  std::size_t point_count = 24;
  std::size_t restarts = 10;
  std::uint64_t seed = 1;
  double repulsion_exponent = 12.0;
  std::size_t descent_steps = 1500;
  double step_size = 1e-3;
  std::size_t maximin_refine_steps = 1500;
  std::size_t threads = 1;
  bool record_trajectory = false;
  bool antipodal = false;  // search only centrally symmetric sets {p, -p}

  void validate() const;
};

struct TrajectoryPoint {
  std::size_t step = 0;
  int phase = 1;        // 1 = repulsion descent, 2 = soft-minimum refinement
  double min_distance = 0;
  double energy = 0;    // repulsion energy; recorded in phase 1 only
};

struct SearchResult {
  Configuration configuration;
  double min_distance = 0;
  std::size_t restart_index = 0;
  std::optional<std::vector<TrajectoryPoint>> trajectory;
};

/// Repulsion energy sum_{i<j} |p_i - p_j|^{-s} of points stored as the columns of a 4 x M matrix,
/// and its gradient with respect to the ambient coordinates.
double repulsion_energy(const Eigen::Matrix4Xd& points, double exponent);
Eigen::Matrix4Xd repulsion_gradient(const Eigen::Matrix4Xd& points, double exponent);

/// Uniform random unit vectors, as columns.
Eigen::Matrix4Xd random_unit_points(std::size_t count, std::uint64_t seed);

/// Maximin search on S^3: repulsion descent, then soft-minimum refinement. Deterministic in
/// (params.seed, params); the result does not depend on params.threads.
SearchResult maximin_optimize(const SearchParams& params);

/// Single restart, exposed for tests.
SearchResult maximin_restart(const SearchParams& params, std::size_t restart_index);

/// Max relative component error between the analytic repulsion gradient and central finite
/// differences (step 1e-6) at a random unit-norm state.
double gradient_check(const SearchParams& params, std::uint64_t probe_seed);

}  // namespace kiss4d
