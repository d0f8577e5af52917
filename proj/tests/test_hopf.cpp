#include <doctest.h>

#include <complex>

#include "kiss4d/hopf.hpp"
#include "support.hpp"

using namespace kiss4d;
using testing::kPi;

namespace {

// Independent lift: z = e^{i theta} cos(alpha/2), w = e^{i (theta + phi)} sin(alpha/2), x = (Re z, Im z, Re w, Im w).
R4Point lift_direct(const S2Point<double>& c, double theta) {
  const double cz = std::cos(c.alpha / 2), sw = std::sin(c.alpha / 2);
  return {cz * std::cos(theta), cz * std::sin(theta), sw * std::cos(theta + c.phi), sw * std::sin(theta + c.phi)};
}

double direct_d3(const S2Point<double>& ci, double ti, const S2Point<double>& cj, double tj) {
  return chord_s3(lift_direct(ci, ti), lift_direct(cj, tj));
}

}  // namespace

TEST_CASE("projection of the poles and equator") {
  const auto north = hopf_project(R4Point(1, 0, 0, 0));
  CHECK(std::abs(north.a()) == doctest::Approx(0).epsilon(1e-15));
  CHECK(north.t() == doctest::Approx(1));

  const auto south = hopf_project(from_complex_pair<double>({1, 0}, {0, 0}));
  CHECK(std::abs(south.a()) < 1e-12);
  CHECK(south.t() == doctest::Approx(-1));

  const double h = std::sqrt(0.5);
  const auto eq = hopf_project(from_complex_pair<double>({h, 0}, {h, 0}));
  CHECK(eq.a().real() == doctest::Approx(1));
  CHECK(std::abs(eq.a().imag()) < 1e-12);
  CHECK(std::abs(eq.t()) < 1e-12);
  CHECK(eq.alpha == doctest::Approx(kPi / 2));
  CHECK(std::abs(eq.phi) < 1e-12);
}

TEST_CASE("projection rejects points off the sphere") {
  CHECK_THROWS_AS(hopf_project(R4Point(0.5, 0, 0, 0)), NormalizationError);
  CHECK_THROWS_AS(hopf_project(R4Point(1 + 1e-8, 0, 0, 0)), NormalizationError);
  CHECK_NOTHROW(hopf_project(R4Point(1 + 1e-10, 0, 0, 0)));
}

TEST_CASE("lift examples") {
  const auto north = hopf_lift(S2Point<double>{0, 0}, 0.0);
  CHECK((north - R4Point(1, 0, 0, 0)).norm() < 1e-15);

  const double h = std::sqrt(0.5);
  const auto eq = hopf_lift(S2Point<double>::polar(kPi / 2, 0), 0.0);
  CHECK(std::abs(w_of(eq) - std::complex<double>(h, 0)) < 1e-15);
  CHECK(std::abs(z_of(eq) - std::complex<double>(h, 0)) < 1e-15);

  // The half-angle form is regular at the south pole.
  const auto south = hopf_lift(S2Point<double>::polar(kPi, 0), 0.0);
  CHECK(std::abs(w_of(south) - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(z_of(south)) < 1e-15);
}

TEST_CASE("complex (a, t) lift agrees with the half-angle lift and is singular at t = -1") {
  testing::Gen gen(11);
  for (int k = 0; k < 1000; ++k) {
    const auto c = gen.s2();
    if (c.t() < -0.999) continue;
    const double th = gen.angle();
    CHECK((hopf_lift_complex(c.a(), c.t(), th) - hopf_lift(c, th)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(hopf_lift_complex<double>({0, 0}, -1.0, 0.0), DomainError);
}

TEST_CASE("round trip project(lift(c, theta)) = c over 1e5 samples") {
  testing::Gen gen(1);
  double worst = 0;
  for (int k = 0; k < 100000; ++k) {
    const auto c = gen.s2();
    const auto back = hopf_project(hopf_lift(c, gen.angle()));
    worst = std::max(worst, (back.cartesian() - c.cartesian()).norm());
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("projection preserves the unit norm") {
  testing::Gen gen(2);
  double worst = 0;
  for (int k = 0; k < 100000; ++k) {
    const auto p = gen.s3();
    const auto w = w_of(p), z = z_of(p);
    const double n = std::norm(2.0 * w * std::conj(z)) + std::pow(std::norm(z) - std::norm(w), 2);
    worst = std::max(worst, std::abs(n - 1));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("S2 chord examples") {
  const auto north = S2Point<double>::polar(0, 0);
  const auto eq = S2Point<double>::polar(kPi / 2, 0);
  CHECK(chord_s2(eq, eq) == 0);
  CHECK(chord_s2(north, eq) == doctest::Approx(std::sqrt(2.0)));
  const auto c = S2Point<double>::polar(0.7, 1.1);
  const auto anti = S2Point<double>::polar(kPi - 0.7, 1.1 + kPi);
  CHECK(chord_s2(c, anti) == doctest::Approx(2));
}

TEST_CASE("S3 chord examples") {
  const R4Point p(1, 0, 0, 0), q(0, 1, 0, 0);
  CHECK(chord_s3(p, p) == 0);
  CHECK(chord_s3(p, R4Point(-p)) == doctest::Approx(2));
  CHECK(chord_s3(p, q) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("phi offset") {
  testing::Gen gen(3);
  const auto north = S2Point<double>{0, 0};
  for (int k = 0; k < 100; ++k) {
    const auto cj = gen.s2();
    if (chord_s2(north, cj) > 1.99) continue;
    CHECK(std::abs(phi_offset(north, cj).value) < 1e-12);
    const auto self = phi_offset(cj, cj);
    CHECK(std::abs(self.value) < 1e-12);
    const auto other = phi_offset(cj, gen.s2());
    CHECK(other.cos * other.cos + other.sin * other.sin == doctest::Approx(1).epsilon(1e-12));
  }
  const auto c = S2Point<double>::polar(0.4, 2.0);
  CHECK_THROWS_AS(phi_offset(c, S2Point<double>::polar(kPi - 0.4, 2.0 + kPi)), UndefinedOffsetError);
}

TEST_CASE("phi offset matches its explicit cosine and sine forms") {
  testing::Gen gen(4);
  for (int k = 0; k < 1000; ++k) {
    const auto ci = gen.s2(), cj = gen.s2();
    const double d2 = chord_s2(ci, cj);
    if (d2 > 1.999) continue;
    const double scale = 2 / std::sqrt(4 - d2 * d2);
    const double dphi = cj.phi - ci.phi;
    const double si = std::sin(ci.alpha / 2), sj = std::sin(cj.alpha / 2);
    const double cos_phi = scale * (std::cos(dphi) * si * sj + std::cos(ci.alpha / 2) * std::cos(cj.alpha / 2));
    const double sin_phi = scale * std::sin(dphi) * si * sj;
    const auto off = phi_offset(ci, cj);
    CHECK(off.cos == doctest::Approx(cos_phi).epsilon(1e-9));
    CHECK(std::abs(off.sin - sin_phi) < 1e-9);
    CHECK(std::abs(std::cos(off.value) - cos_phi) < 1e-9);
  }
}

TEST_CASE("fiber distance examples") {
  const auto eq = S2Point<double>::polar(kPi / 2, 0.3);
  CHECK(fiber_distance(eq, 0.2, eq, 0.2 + kPi) == doctest::Approx(2));
  CHECK(fiber_distance(eq, 0.2, eq, 0.2 + kPi / 3) == doctest::Approx(1));
  const auto north = S2Point<double>{0, 0};
  const auto eq0 = S2Point<double>::polar(kPi / 2, 0);
  CHECK(fiber_distance(north, 0.0, eq0, 0.0) == doctest::Approx(std::sqrt(2 - std::sqrt(2.0))).epsilon(1e-12));
  CHECK(fiber_distance(north, 0.0, eq0, 0.0) == doctest::Approx(0.76537).epsilon(1e-5));
}

TEST_CASE("fiber distance equals the direct-lift chord over 1e5 samples") {
  testing::Gen gen(5);
  double worst = 0;
  for (int k = 0; k < 100000; ++k) {
    const auto ci = gen.s2(), cj = gen.s2();
    const double ti = gen.angle(), tj = gen.angle();
    worst = std::max(worst, std::abs(fiber_distance(ci, ti, cj, tj) - direct_d3(ci, ti, cj, tj)));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("fiber distance at antipodal circles falls back to the direct chord") {
  const auto ci = S2Point<double>::polar(0.9, 0.2);
  const auto cj = S2Point<double>::polar(kPi - 0.9, 0.2 + kPi);
  for (double t : {0.0, 1.0, 2.5}) {
    CHECK(fiber_distance(ci, 0.3, cj, t) == doctest::Approx(direct_d3(ci, 0.3, cj, t)).epsilon(1e-12));
    CHECK(fiber_distance(ci, 0.3, cj, t) == doctest::Approx(std::sqrt(2.0)));
  }
}

TEST_CASE("constant angle shifts preserve fiber distances") {
  testing::Gen gen(6);
  for (int k = 0; k < 1000; ++k) {
    const auto ci = gen.s2(), cj = gen.s2();
    const double ti = gen.angle(), tj = gen.angle(), c = gen.uniform(-10, 10);
    CHECK(std::abs(fiber_distance(ci, ti, cj, tj) - fiber_distance(ci, ti + c, cj, tj + c)) < 1e-12);
  }
}

TEST_CASE("theta_min examples and domain") {
  CHECK(*theta_min(0.0) == doctest::Approx(kPi / 3));
  CHECK(*theta_min(std::sqrt(2.0)) == doctest::Approx(kPi / 4));
  CHECK_FALSE(theta_min(1.9).has_value());
  CHECK(theta_min(std::sqrt(3.0)).has_value());
  CHECK(*theta_min(std::sqrt(3.0)) == doctest::Approx(0).epsilon(1e-7));
  CHECK_THROWS_AS(theta_min(-0.1), DomainError);
  CHECK_THROWS_AS(theta_min(2.1), DomainError);
}

TEST_CASE("kissing boundary is |wrap(dtheta + Phi)| >= theta_min") {
  testing::Gen gen(7);
  int checked = 0;
  for (int k = 0; k < 100000; ++k) {
    const auto ci = gen.s2(), cj = gen.s2();
    const double d2 = chord_s2(ci, cj);
    const auto tm = theta_min(d2);
    if (!tm) {
      // Beyond sqrt(3) every angle kisses.
      CHECK(fiber_distance(ci, gen.angle(), cj, gen.angle()) >= 1 - 1e-12);
      continue;
    }
    const double ti = gen.angle(), tj = gen.angle();
    const double x = std::abs(wrap_pi(tj - ti + phi_offset(ci, cj).value));
    // Skip samples within rounding distance of the boundary.
    if (std::abs(x - *tm) < 1e-9) continue;
    ++checked;
    CHECK((fiber_distance(ci, ti, cj, tj) >= 1) == (x >= *tm));
  }
  CHECK(checked > 50000);
}

TEST_CASE("d2_max examples, domain and consistency") {
  CHECK(d2_max(std::sqrt(2.0)) == doctest::Approx(2));
  CHECK(d2_max(2.0) == doctest::Approx(0).epsilon(1e-15));
  CHECK(d2_max(0.0) == doctest::Approx(0).epsilon(1e-15));
  CHECK_THROWS_AS(d2_max(-1e-3), DomainError);
  CHECK_THROWS_AS(d2_max(2.001), DomainError);

  testing::Gen gen(8);
  double worst = -1;
  for (int k = 0; k < 100000; ++k) {
    const auto p = gen.s3(), q = gen.s3();
    const double excess = chord_s2(hopf_project(p), hopf_project(q)) - d2_max(chord_s3(p, q));
    worst = std::max(worst, excess);
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("angle wrapping") {
  CHECK(wrap_two_pi(-0.5) == doctest::Approx(2 * kPi - 0.5));
  CHECK(wrap_two_pi(2 * kPi) == doctest::Approx(0));
  CHECK(wrap_pi(kPi) == doctest::Approx(kPi));
  CHECK(wrap_pi(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_pi(3 * kPi / 2) == doctest::Approx(-kPi / 2));
}
