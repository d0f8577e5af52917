#pragma once

// Hopf fibration S^3 -> S^2 and the distance formulas built on it.
//
// Convention, fixed repo-wide: a point x = (x1, x2, x3, x4) of S^3 is the complex
// pair (w, z) with z = x1 + i x2 and w = x3 + i x4. The projection is
// (w, z) -> (a, t) = (2 w conj(z), |z|^2 - |w|^2) and a point (alpha, phi) of S^2
// lifts to the great circle (w, z) = e^{i theta} (sin(alpha/2) e^{i phi}, cos(alpha/2)).

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "kiss4d/errors.hpp"

namespace kiss4d {

template <typename Scalar>
using Point4 = Eigen::Matrix<Scalar, 4, 1>;

using R4Point = Point4<double>;

namespace tol {
inline constexpr double kConstructed = 1e-12;  // invariants of constructed values
inline constexpr double kOracle = 1e-9;        // round trips and oracle comparisons
inline constexpr double kNormInput = 1e-9;     // hopf_project input check
inline constexpr double kKissing = 1e-9;       // chord >= 1 - kKissing counts as kissing
inline constexpr double kCircle = 1e-6;        // S^2 chord below which points share a circle
}  // namespace tol

/// Representative of an angle in [0, 2 pi).
template <typename Scalar>
Scalar wrap_two_pi(Scalar angle) {
  using std::floor;
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  Scalar r = angle - two_pi * floor(angle / two_pi);
  if (r >= two_pi) r -= two_pi;
  if (r < Scalar(0)) r = Scalar(0);
  return r;
}

/// Representative of an angle in (-pi, pi].
template <typename Scalar>
Scalar wrap_pi(Scalar angle) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar r = wrap_two_pi(angle + pi) - pi;
  if (r <= -pi) r += Scalar(2) * pi;
  return r;
}

/// A point of S^2, stored in polar form. alpha in [0, pi] is measured from the
/// north pole t = 1; phi in [0, 2 pi) is the azimuth of a.
template <typename Scalar>
struct S2Point {
  Scalar alpha{0};
  Scalar phi{0};

  static S2Point polar(Scalar alpha, Scalar phi) {
    // Reflect alpha into [0, pi] by going over the pole.
    const Scalar pi = std::numbers::pi_v<Scalar>;
    Scalar a = wrap_two_pi(alpha);
    if (a > pi) {
      a = Scalar(2) * pi - a;
      phi += pi;
    }
    return S2Point{a, wrap_two_pi(phi)};
  }

  /// From the complex-real form (a, t). No normalization is applied.
  static S2Point from_complex(std::complex<Scalar> a, Scalar t) {
    using std::abs;
    using std::arg;
    using std::atan2;
    const Scalar r = abs(a);
    const Scalar phi = r == Scalar(0) ? Scalar(0) : wrap_two_pi(arg(a));
    return S2Point{atan2(r, t), phi};
  }

  std::complex<Scalar> a() const { return std::polar(std::sin(alpha), phi); }
  Scalar t() const { return std::cos(alpha); }

  Eigen::Matrix<Scalar, 3, 1> cartesian() const {
    using std::cos;
    using std::sin;
    return {sin(alpha) * cos(phi), sin(alpha) * sin(phi), cos(alpha)};
  }
};

/// Phi offset between two circles, with the two normalized components it is built from.
template <typename Scalar>
struct PhiOffset {
  Scalar value{0};  // in (-pi, pi]
  Scalar cos{1};
  Scalar sin{0};
};

template <typename Scalar>
std::complex<Scalar> z_of(const Point4<Scalar>& p) {
  return {p(0), p(1)};
}

template <typename Scalar>
std::complex<Scalar> w_of(const Point4<Scalar>& p) {
  return {p(2), p(3)};
}

template <typename Scalar>
Point4<Scalar> from_complex_pair(std::complex<Scalar> w, std::complex<Scalar> z) {
  return {z.real(), z.imag(), w.real(), w.imag()};
}

template <typename Scalar>
void require_unit(const Point4<Scalar>& p, Scalar tolerance = Scalar(tol::kNormInput)) {
  using std::abs;
  const Scalar deviation = abs(p.norm() - Scalar(1));
  if (!(deviation <= tolerance)) {
    throw NormalizationError("point is not unit-norm (|norm - 1| = " +
                             std::to_string(static_cast<double>(deviation)) + ")");
  }
}

template <typename Scalar>
S2Point<Scalar> hopf_project(const Point4<Scalar>& p, Scalar tolerance = Scalar(tol::kNormInput)) {
  require_unit(p, tolerance);
  const auto z = z_of(p);
  const auto w = w_of(p);
  const std::complex<Scalar> a = Scalar(2) * w * std::conj(z);
  const Scalar t = std::norm(z) - std::norm(w);
  return S2Point<Scalar>::from_complex(a, t);
}

/// Lift along the fiber. Uses the half-angle form, which stays regular at the south pole
/// where the (a, t) form divides by sqrt(2 (1 + t)) = 0.
template <typename Scalar>
Point4<Scalar> hopf_lift(const S2Point<Scalar>& c, Scalar theta) {
  using std::cos;
  using std::sin;
  const Scalar half = c.alpha / Scalar(2);
  const std::complex<Scalar> w = std::polar(sin(half), theta + c.phi);
  const std::complex<Scalar> z = std::polar(cos(half), theta);
  return from_complex_pair(w, z);
}

/// Lift in the (a, t) form, exactly as the fiber formula is usually printed. Singular at t = -1.
/// Does not normalize: an (a, t) off the unit sphere produces a point off S^3.
template <typename Scalar>
Point4<Scalar> hopf_lift_complex(std::complex<Scalar> a, Scalar t, Scalar theta) {
  using std::sqrt;
  if (!(t > Scalar(-1))) throw DomainError("hopf_lift_complex: t = -1 is singular");
  const std::complex<Scalar> phase = std::polar(Scalar(1), theta);
  const std::complex<Scalar> w = a * phase / sqrt(Scalar(2) * (Scalar(1) + t));
  const std::complex<Scalar> z = phase * sqrt((Scalar(1) + t) / Scalar(2));
  return from_complex_pair(w, z);
}

/// Euclidean chord between two points of S^2, in [0, 2].
template <typename Scalar>
Scalar chord_s2(const S2Point<Scalar>& ci, const S2Point<Scalar>& cj) {
  using std::min;
  return min(Scalar(2), (ci.cartesian() - cj.cartesian()).norm());
}

/// Euclidean chord between two points of S^3, in [0, 2].
template <typename Scalar>
Scalar chord_s3(const Point4<Scalar>& p, const Point4<Scalar>& q) {
  using std::min;
  return min(Scalar(2), (p - q).norm());
}

namespace detail {

// K = cos(ai/2) cos(aj/2) + sin(ai/2) sin(aj/2) e^{-i (phi_j - phi_i)}; its modulus is
// sqrt(4 - d2^2) / 2 and its argument is -Phi_ij.
template <typename Scalar>
std::complex<Scalar> fiber_overlap(const S2Point<Scalar>& ci, const S2Point<Scalar>& cj) {
  using std::cos;
  using std::sin;
  const Scalar si = sin(ci.alpha / 2), sj = sin(cj.alpha / 2);
  const Scalar cci = cos(ci.alpha / 2), ccj = cos(cj.alpha / 2);
  const Scalar dphi = cj.phi - ci.phi;
  return {cos(dphi) * si * sj + cci * ccj, -sin(dphi) * si * sj};
}

template <typename Scalar>
constexpr Scalar kDegenerateOverlap = Scalar(1e-12);

}  // namespace detail

/// Offset angle between the fibers over ci and cj. Undefined for antipodal circles.
template <typename Scalar>
PhiOffset<Scalar> phi_offset(const S2Point<Scalar>& ci, const S2Point<Scalar>& cj) {
  using std::abs;
  using std::atan2;
  using std::sqrt;
  const auto overlap = detail::fiber_overlap(ci, cj);
  if (abs(overlap) <= detail::kDegenerateOverlap<Scalar>) {
    throw UndefinedOffsetError("phi_offset: circles are antipodal on S^2");
  }
  const Scalar d2 = chord_s2(ci, cj);
  const Scalar scale = Scalar(2) / sqrt(Scalar(4) - d2 * d2);
  PhiOffset<Scalar> out;
  out.cos = scale * overlap.real();
  out.sin = -scale * overlap.imag();
  out.value = wrap_pi(atan2(-overlap.imag(), overlap.real()));
  return out;
}

/// Distance on S^3 between theta_i on the fiber over ci and theta_j on the fiber over cj.
///
/// d3^2 = 2 - sqrt(4 - d2^2) cos(theta_j - theta_i + Phi_ij), evaluated in the rearranged form
/// d2^2 / (2 (1 + |K|)) + 4 |K| sin^2(x / 2) with |K| = sqrt(4 - d2^2) / 2, which has no
/// cancellation near d3 = 0.
template <typename Scalar>
Scalar fiber_distance(const S2Point<Scalar>& ci, Scalar theta_i, const S2Point<Scalar>& cj,
                      Scalar theta_j) {
  using std::abs;
  using std::sin;
  using std::sqrt;
  const auto overlap = detail::fiber_overlap(ci, cj);
  if (abs(overlap) <= detail::kDegenerateOverlap<Scalar>) {
    return chord_s3(hopf_lift(ci, theta_i), hopf_lift(cj, theta_j));
  }
  const Scalar d2 = chord_s2(ci, cj);
  const Scalar k = sqrt(Scalar(4) - d2 * d2) / Scalar(2);
  const Scalar x = theta_j - theta_i + phi_offset(ci, cj).value;
  const Scalar s = sin(x / Scalar(2));
  const Scalar d3_sq = d2 * d2 / (Scalar(2) * (Scalar(1) + k)) + Scalar(4) * k * s * s;
  using std::min;
  return min(Scalar(2), sqrt(d3_sq));
}

/// Smallest |theta_j - theta_i + Phi_ij| keeping two points on circles d2 apart kissing.
/// Empty when d2 > sqrt(3): such points kiss at every angle.
template <typename Scalar>
std::optional<Scalar> theta_min(Scalar d2) {
  using std::acos;
  using std::min;
  using std::sqrt;
  if (!(d2 >= Scalar(0) && d2 <= Scalar(2))) {
    throw DomainError("theta_min: d2 must lie in [0, 2]");
  }
  if (d2 > sqrt(Scalar(3))) return std::nullopt;
  return acos(min(Scalar(1), Scalar(1) / sqrt(Scalar(4) - d2 * d2)));
}

/// Largest S^2 separation of the circles of two S^3 points at chord d3.
template <typename Scalar>
Scalar d2_max(Scalar d3) {
  using std::max;
  using std::sqrt;
  if (!(d3 >= Scalar(0) && d3 <= Scalar(2))) {
    throw DomainError("d2_max: d3 must lie in [0, 2]");
  }
  const Scalar u = d3 * d3 - Scalar(2);
  return sqrt(max(Scalar(0), Scalar(4) - u * u));
}

}  // namespace kiss4d
