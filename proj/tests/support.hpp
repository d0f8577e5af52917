#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "kiss4d/configuration.hpp"

namespace testing {

inline constexpr double kPi = std::numbers::pi;

struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double angle() { return uniform(0, 2 * kPi); }

  kiss4d::S2Point<double> s2() {
    // Uniform on S^2: t uniform in [-1, 1].
    const double t = uniform(-1, 1);
    return kiss4d::S2Point<double>::polar(std::acos(t), angle());
  }

  kiss4d::R4Point s3() {
    std::normal_distribution<double> n(0, 1);
    kiss4d::R4Point p;
    do {
      for (int k = 0; k < 4; ++k) p(k) = n(rng);
    } while (p.norm() < 1e-6);
    return p.normalized();
  }

  // Random sequential addition: keep sampling until `count` points are accepted or attempts run out.
  // Every accepted point is at chord >= 1 + margin from the earlier ones.
  std::vector<kiss4d::R4Point> kissing_points(std::size_t count, double margin = 1e-6, int attempts = 20000) {
    std::vector<kiss4d::R4Point> out;
    for (int a = 0; a < attempts && out.size() < count; ++a) {
      const auto p = s3();
      bool ok = true;
      for (const auto& q : out) ok = ok && (p - q).norm() >= 1 + margin;
      if (ok) out.push_back(p);
    }
    return out;
  }

  std::mt19937_64 rng;
};

// Point at angle `deg` degrees from e1 inside the (x1, x2) plane.
inline kiss4d::R4Point planar(double deg) {
  const double a = deg * kPi / 180;
  return {std::cos(a), std::sin(a), 0, 0};
}

}  // namespace testing
