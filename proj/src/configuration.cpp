#include "kiss4d/configuration.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace kiss4d {

Configuration::Configuration(std::vector<R4Point> points, double norm_tol, double duplicate_tol)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!points_[i].allFinite()) {
      throw NormalizationError("point " + std::to_string(i) + " has non-finite coordinates");
    }
    const double deviation = std::abs(points_[i].norm() - 1.0);
    if (!(deviation <= norm_tol)) {
      std::ostringstream msg;
      msg << "point " << i << " is not unit-norm (|norm - 1| = " << deviation << ")";
      throw NormalizationError(msg.str());
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (chord_s3(points_[i], points_[j]) <= duplicate_tol) {
        throw DuplicatePointError("points " + std::to_string(i) + " and " + std::to_string(j) +
                                  " coincide");
      }
    }
  }
}

Configuration Configuration::without(std::size_t index) const {
  return without(std::vector<std::size_t>{index});
}

Configuration Configuration::without(const std::vector<std::size_t>& indices) const {
  std::vector<bool> drop(points_.size(), false);
  for (auto i : indices) {
    if (i >= points_.size()) throw DomainError("index " + std::to_string(i) + " out of range");
    drop[i] = true;
  }
  std::vector<R4Point> kept;
  kept.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!drop[i]) kept.push_back(points_[i]);
  }
  Configuration out;
  out.points_ = std::move(kept);
  return out;
}

std::size_t FiberedConfiguration::point_count() const {
  std::size_t n = 0;
  for (const auto& circle : circles) n += circle.thetas.size();
  return n;
}

std::vector<R4Point> FiberedConfiguration::lift_points() const {
  std::vector<R4Point> out;
  out.reserve(point_count());
  for (const auto& circle : circles) {
    for (double theta : circle.thetas) out.push_back(hopf_lift(circle.base, theta));
  }
  return out;
}

Configuration FiberedConfiguration::lift() const { return Configuration(lift_points()); }

Signature::Signature(Counts counts) : counts_(std::move(counts)) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second == 0) {
      it = counts_.erase(it);
    } else {
      total_ += it->first * it->second;
      ++it;
    }
  }
}

std::size_t Signature::count_of(std::size_t circle_size) const {
  auto it = counts_.find(circle_size);
  return it == counts_.end() ? 0 : it->second;
}

std::string Signature::to_string() const {
  if (counts_.empty()) return "0";
  std::string out;
  for (const auto& [size, count] : counts_) {
    if (!out.empty()) out += "+";
    out += std::to_string(count) + "x" + std::to_string(size);
  }
  return out;
}

Rotation4::Rotation4(const Eigen::Matrix4d& m, double tol) : matrix_(m) {
  const double orth = (m.transpose() * m - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
  if (!(orth <= tol) || !(std::abs(m.determinant() - 1.0) <= tol)) {
    throw DomainError("matrix is not a proper rotation");
  }
}

VerificationReport verify_kissing(const Configuration& c, double tol) {
  VerificationReport report;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const double d = chord_s3(c[i], c[j]);
      if (first || d < report.min_distance) {
        first = false;
        report.min_distance = d;
        report.argmin_pair = {i, j};
      }
      if (d < 1.0 - tol) report.violations.push_back({{i, j}, d});
    }
  }
  report.is_kissing = report.violations.empty();
  return report;
}

std::vector<IndexPair> contact_pairs(const Configuration& c, double lo, double hi) {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const double d = chord_s3(c[i], c[j]);
      if (d >= lo && d <= hi) out.emplace_back(i, j);
    }
  }
  return out;
}

FiberedConfiguration group_into_circles(const Configuration& c, double tol) {
  FiberedConfiguration out;
  std::vector<Eigen::Vector3d> centers;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto projected = hopf_project(c[i]);
    const Eigen::Vector3d x = projected.cartesian();
    std::size_t hits = 0;
    std::size_t target = 0;
    for (std::size_t k = 0; k < centers.size(); ++k) {
      if ((centers[k] - x).norm() <= tol) {
        ++hits;
        target = k;
      }
    }
    if (hits > 1) {
      throw GroupingAmbiguityError("point " + std::to_string(i) +
                                   " is within tolerance of several circles");
    }
    if (hits == 0) {
      centers.push_back(x);
      out.circles.push_back(Circle{projected, {}, {}});
      target = centers.size() - 1;
    }
    // Fiber phase relative to the theta = 0 lift of the circle base:
    // <lift(base, 0), p> = e^{i theta} for p on that fiber.
    Circle& circle = out.circles[target];
    const R4Point origin = hopf_lift(circle.base, 0.0);
    const std::complex<double> overlap =
        std::conj(w_of(origin)) * w_of(c[i]) + std::conj(z_of(origin)) * z_of(c[i]);
    circle.thetas.push_back(wrap_two_pi(std::arg(overlap)));
    circle.members.push_back(i);
  }
  return out;
}

Signature signature(const FiberedConfiguration& f) {
  Signature::Counts counts;
  for (const auto& circle : f.circles) ++counts[circle.thetas.size()];
  return Signature(std::move(counts));
}

Signature signature(const Configuration& c, double tol) {
  return signature(group_into_circles(c, tol));
}

std::vector<IndexPair> antipodal_pairs(const Configuration& c, double tol) {
  std::vector<IndexPair> out;
  std::vector<bool> used(c.size(), false);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (used[j]) continue;
      if ((c[i] + c[j]).norm() <= tol) {
        out.emplace_back(i, j);
        used[i] = used[j] = true;
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> singletons(const Configuration& c, double tol) {
  std::vector<bool> paired(c.size(), false);
  for (const auto& [i, j] : antipodal_pairs(c, tol)) paired[i] = paired[j] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!paired[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 applied to the seed advanced by `stream` golden-ratio increments.
  std::uint64_t x = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Rotation4 random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Eigen::Matrix4d sample;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) sample(i, j) = normal(rng);
    }
    Eigen::HouseholderQR<Eigen::Matrix4d> qr(sample);
    const Eigen::Matrix4d upper = qr.matrixQR().triangularView<Eigen::Upper>();
    if (upper.diagonal().cwiseAbs().minCoeff() < 1e-6) continue;
    Eigen::Matrix4d q = qr.householderQ();
    // Sign fix makes Q Haar-distributed on O(4); a column flip then moves it onto SO(4).
    for (int k = 0; k < 4; ++k) {
      if (upper(k, k) < 0) q.col(k) *= -1.0;
    }
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return Rotation4(q);
  }
}

Configuration apply_rotation(const Configuration& c, const Rotation4& r) {
  std::vector<R4Point> out;
  out.reserve(c.size());
  for (const auto& p : c) {
    R4Point q = r * p;
    out.push_back(q / q.norm());
  }
  return Configuration(std::move(out));
}

Signature irreducible_signature(const Configuration& c, std::uint64_t seed, double tol) {
  constexpr int kAttempts = 4;
  constexpr int kSeedsPerAttempt = 3;
  std::uint64_t stream = 0;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Signature> found;
    bool grouped = true;
    for (int k = 0; k < kSeedsPerAttempt; ++k) {
      const auto rotated = apply_rotation(c, random_rotation(split_seed(seed, stream++)));
      try {
        found.push_back(signature(rotated, tol));
      } catch (const GroupingAmbiguityError&) {
        grouped = false;
        break;
      }
    }
    if (grouped && std::all_of(found.begin(), found.end(),
                               [&](const Signature& s) { return s == found.front(); })) {
      return found.front();
    }
  }
  throw NonGenericRotationError("signature is not stable across random rotations");
}

FiberedConfiguration shift_all_angles(const FiberedConfiguration& f, double shift) {
  FiberedConfiguration out = f;
  for (auto& circle : out.circles) {
    for (double& theta : circle.thetas) theta = wrap_two_pi(theta + shift);
  }
  return out;
}

Configuration add_antipode(const Configuration& c, std::size_t index) {
  if (index >= c.size()) {
    throw DomainError("add_antipode: index " + std::to_string(index) + " out of range");
  }
  const R4Point antipode = -c[index];
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (chord_s3(c[j], antipode) <= tol::kOracle) {
      throw DuplicatePointError("add_antipode: antipode of point " + std::to_string(index) +
                                " is already present");
    }
  }
  std::vector<R4Point> points = c.points();
  points.push_back(antipode);
  return Configuration(std::move(points));
}

AntipodeExtension antipode_extension_check(const Configuration& c, std::size_t singleton,
                                           double tol) {
  if (singleton >= c.size()) throw DomainError("antipode_extension_check: index out of range");
  if (!verify_kissing(c, tol).is_kissing) {
    throw PreconditionError("antipode_extension_check: configuration is not kissing");
  }
  std::vector<bool> paired(c.size(), false);
  for (const auto& [i, j] : antipodal_pairs(c)) paired[i] = paired[j] = true;
  if (paired[singleton]) {
    throw PreconditionError("antipode_extension_check: point " + std::to_string(singleton) +
                            " already has its antipode");
  }

  AntipodeExtension out;
  const R4Point antipode = -c[singleton];
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == singleton) continue;
    const double d = chord_s3(antipode, c[j]);
    if (paired[j]) {
      out.min_to_paired = std::min(out.min_to_paired, d);
      if (d < 1.0 - tol) out.kisses_paired = false;
    } else {
      out.min_to_singletons = std::min(out.min_to_singletons, d);
      if (d < 1.0 - tol) {
        out.kisses_singletons = false;
        out.blocking.push_back(j);
      }
    }
  }
  return out;
}

}  // namespace kiss4d
