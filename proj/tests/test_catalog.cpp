#include <doctest.h>

#include <algorithm>

#include "kiss4d/catalog.hpp"
#include "support.hpp"

using namespace kiss4d;
using testing::kPi;

namespace {

std::vector<std::size_t> contact_degrees(const Configuration& c) {
  std::vector<std::size_t> deg(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (std::abs((c[i] - c[j]).norm() - 1) <= 1e-9) ++deg[i], ++deg[j];
  return deg;
}

// Smallest circular gap of a set of angles.
double min_gap(std::vector<double> a) {
  std::sort(a.begin(), a.end());
  double best = 2 * kPi - (a.back() - a.front());
  for (std::size_t k = 1; k < a.size(); ++k) best = std::min(best, a[k] - a[k - 1]);
  return best;
}

}  // namespace

TEST_CASE("24-cell") {
  const auto c = make_24cell();
  CHECK(c.size() == 24);
  const auto rep = verify_kissing(c);
  CHECK(rep.is_kissing);
  CHECK(std::abs(rep.min_distance - 1) <= 1e-12);
  const auto deg = contact_degrees(c);
  for (auto d : deg) CHECK(d == 8);
  CHECK(contact_pairs(c, 1 - 1e-9, 1 + 1e-9).size() == 96);
  CHECK(signature(c).to_string() == "6x4");
  CHECK(antipodal_pairs(c).size() == 12);

  // Closed under negation.
  for (const auto& p : c) {
    double best = 2;
    for (const auto& q : c) best = std::min(best, (q + p).norm());
    CHECK(best <= 1e-12);
  }
}

TEST_CASE("3x6") {
  const auto f = fibered_3x6();
  REQUIRE(f.circles.size() == 3);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(f.circles[a].base.alpha == doctest::Approx(kPi / 2));
    CHECK(min_gap(f.circles[a].thetas) == doctest::Approx(kPi / 3));
    CHECK(std::abs(chord_s2(f.circles[a].base, f.circles[(a + 1) % 3].base) - std::sqrt(3.0)) <= 1e-12);
  }
  const auto c = make_3x6();
  CHECK(c.size() == 18);
  const auto rep = verify_kissing(c);
  CHECK(rep.is_kissing);
  CHECK(rep.min_distance == doctest::Approx(1));
  CHECK(signature(f).to_string() == "3x6");
  CHECK(signature(c).to_string() == "3x6");
  CHECK(antipodal_pairs(c).size() == 9);
  CHECK(irreducible_signature(c, 1).to_string() == "9x2");
}

TEST_CASE("16x1") {
  const auto f = fibered_16x1();
  REQUIRE(f.circles.size() == 4);
  for (int k = 0; k < 3; ++k) {
    CHECK(f.circles[k].thetas.size() == 5);
    CHECK(min_gap(f.circles[k].thetas) == doctest::Approx(61 * kPi / 180));
    CHECK(min_gap(f.circles[k].thetas) >= *theta_min(0.0));
  }
  CHECK(f.circles[3].base.alpha == 0);
  CHECK(f.circles[3].thetas == std::vector<double>{300 * kPi / 180});
  const auto c = make_16x1();
  CHECK(c.size() == 16);
  CHECK(verify_kissing(c).is_kissing);
  CHECK(antipodal_pairs(c).empty());
  CHECK(irreducible_signature(c, 1).to_string() == "16x1");
}

TEST_CASE("6x2+4x1") {
  const auto f = fibered_6x2_4x1();
  for (int k = 0; k < 3; ++k) CHECK(min_gap(f.circles[k].thetas) == doctest::Approx(kPi / 3));
  const auto c = make_6x2_4x1();
  CHECK(c.size() == 16);
  const auto rep = verify_kissing(c);
  CHECK(rep.is_kissing);
  CHECK(rep.min_distance == doctest::Approx(1));
  CHECK(antipodal_pairs(c).size() == 6);
  CHECK(irreducible_signature(c, 1).to_string() == "6x2+4x1");
}

TEST_CASE("22-point reconstruction reports the printed inconsistencies") {
  const auto cw = make_cohn_woo();
  CHECK(CohnWooReconstruction::kTargetPoints == 22);
  CHECK(CohnWooReconstruction::kTargetPairs == 11);
  CHECK(cw.printed_signature.to_string() == "1x6+8x2");
  CHECK(cw.printed_signature.total() == 22);
  CHECK(cw.printed_antipodal_pairs == 7);

  // |a|^2 + t^2 for a = +-2/3 +- 2i/3, t = -1/2 is 8/9 + 1/4 = 41/36.
  std::size_t off_41_36 = 0, off_zero = 0;
  for (const auto& v : cw.printed_norm_violations) {
    if (std::abs(v.norm_sq - 41.0 / 36) <= 1e-12) ++off_41_36;
    if (std::abs(v.norm_sq) <= 1e-12) ++off_zero;
  }
  CHECK(off_41_36 == 4);
  CHECK(off_zero == 1);
  CHECK(cw.printed_norm_violations.size() == 5);

  REQUIRE(cw.stages.size() == 4);
  CHECK(cw.stages.front().name == "printed");
  CHECK_FALSE(cw.stages.front().on_sphere);
  for (const auto& s : cw.stages) CHECK(s.point_count == 22);
  CHECK(cw.stages.back().on_sphere);
  CHECK(cw.stages.back().antipodal_pairs == 11);
  CHECK(cw.candidate.size() == 22);
  CHECK(antipodal_pairs(cw.candidate).size() == cw.stages.back().antipodal_pairs);
}

TEST_CASE("22-point reconstruction gate") {
  const auto cw = make_cohn_woo();
  const auto rep = verify_kissing(cw.candidate);
  if (cw.status == CohnWooReconstruction::Status::Verified) {
    CHECK(rep.is_kissing);
    CHECK(cw.candidate.size() == 22);
    CHECK(antipodal_pairs(cw.candidate).size() == 11);
    CHECK(cw.diagnosis.empty());
  } else {
    CHECK_FALSE((rep.is_kissing && antipodal_pairs(cw.candidate).size() == 11));
    CHECK_FALSE(cw.diagnosis.empty());
    REQUIRE(cw.stages.back().report.has_value());
    CHECK(cw.stages.back().report->violations.size() == rep.violations.size());
  }
}

TEST_CASE("catalog entries") {
  CHECK(catalog_ids() == std::vector<std::string>{"24cell", "3x6", "16x1", "6x2+4x1", "cohn-woo-22"});
  for (const auto& id : catalog_ids()) {
    const auto e = make_catalog_entry(id);
    CHECK(e.id == id);
    CHECK_FALSE(e.description.empty());
    if (e.verified) CHECK(verify_kissing(e.configuration).is_kissing);
    if (e.fibered) CHECK(e.fibered->point_count() == e.configuration.size());
    // Bit-stable construction.
    const auto again = make_catalog_entry(id);
    REQUIRE(again.configuration.size() == e.configuration.size());
    for (std::size_t k = 0; k < e.configuration.size(); ++k) CHECK(again.configuration[k] == e.configuration[k]);
  }
  CHECK(make_catalog_entry("cohn-woo-22").verified ==
        (make_cohn_woo().status == CohnWooReconstruction::Status::Verified));
  CHECK_THROWS_AS(make_catalog_entry("600cell"), DomainError);
}
