#include "kiss4d/catalog.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace kiss4d {

namespace {

constexpr double kPi = std::numbers::pi;

double deg(double degrees) { return degrees * kPi / 180.0; }

FiberedConfiguration equatorial_triple(const std::vector<double>& equator_thetas,
                                       std::optional<double> pole_theta) {
  FiberedConfiguration f;
  for (int k = 0; k < 3; ++k) {
    f.circles.push_back(Circle{S2Point<double>::polar(kPi / 2, 2 * kPi * k / 3), equator_thetas, {}});
  }
  if (pole_theta) f.circles.push_back(Circle{S2Point<double>{0, 0}, {*pole_theta}, {}});
  return f;
}

// Antipodal pairs among raw (possibly non-unit) vectors.
std::size_t count_raw_pairs(const std::vector<R4Point>& points) {
  std::size_t pairs = 0;
  std::vector<bool> used(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!used[j] && (points[i] + points[j]).norm() <= tol::kOracle) {
        used[i] = used[j] = true;
        ++pairs;
        break;
      }
    }
  }
  return pairs;
}

struct PrintedCircle {
  std::string label;
  std::complex<double> a;
  double t;
  std::vector<double> thetas;
};

std::string describe(const PrintedCircle& c) {
  std::ostringstream out;
  out << c.label << " a=(" << c.a.real() << "," << c.a.imag() << ") t=" << c.t;
  return out.str();
}

// The four printed lines of fiber data for the 22-point configuration.
std::vector<PrintedCircle> printed_cohn_woo() {
  const double r = std::sqrt(3.0) / 2;
  const double q = 2.0 / 3;
  std::vector<double> six;
  for (int n = 1; n <= 6; ++n) six.push_back((n - 0.5) * kPi / 3);
  const std::vector<double> odd_quarter{kPi / 2, 3 * kPi / 2};
  const std::vector<double> printed_fourth{0, kPi / 2};

  std::vector<PrintedCircle> out;
  out.push_back({"line1", {0, 0}, 0.0, six});
  out.push_back({"line2+", {0, r}, -0.5, odd_quarter});
  out.push_back({"line2-", {0, -r}, -0.5, odd_quarter});
  out.push_back({"line3+", {r, 0}, -0.5, odd_quarter});
  out.push_back({"line3-", {-r, 0}, -0.5, odd_quarter});
  for (double re : {q, -q}) {
    for (double im : {q, -q}) {
      out.push_back({"line4", {re, im}, -0.5, printed_fourth});
    }
  }
  return out;
}

std::vector<R4Point> lift_printed(const std::vector<PrintedCircle>& circles) {
  std::vector<R4Point> points;
  for (const auto& c : circles) {
    for (double theta : c.thetas) points.push_back(hopf_lift_complex(c.a, c.t, theta));
  }
  return points;
}

RepairStage evaluate(std::string name, std::string description,
                     const std::vector<PrintedCircle>& circles) {
  RepairStage stage;
  stage.name = std::move(name);
  stage.description = std::move(description);
  const auto points = lift_printed(circles);
  stage.point_count = points.size();
  stage.antipodal_pairs = count_raw_pairs(points);
  stage.on_sphere = true;
  for (const auto& p : points) {
    if (std::abs(p.norm() - 1.0) > tol::kConstructed) stage.on_sphere = false;
  }
  if (stage.on_sphere) stage.report = verify_kissing(Configuration(points));
  return stage;
}

}  // namespace

Configuration make_24cell() {
  std::vector<R4Point> points;
  for (int axis = 0; axis < 4; ++axis) {
    for (double sign : {1.0, -1.0}) {
      R4Point p = R4Point::Zero();
      p(axis) = sign;
      points.push_back(p);
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    R4Point p;
    for (int k = 0; k < 4; ++k) p(k) = (mask >> k & 1) ? -0.5 : 0.5;
    points.push_back(p);
  }
  return Configuration(std::move(points));
}

FiberedConfiguration fibered_3x6() {
  std::vector<double> thetas;
  for (int k = 0; k < 6; ++k) thetas.push_back(k * kPi / 3);
  return equatorial_triple(thetas, std::nullopt);
}

Configuration make_3x6() { return fibered_3x6().lift(); }

FiberedConfiguration fibered_16x1() {
  return equatorial_triple({deg(0), deg(61), deg(122), deg(185), deg(250)}, deg(300));
}

Configuration make_16x1() { return fibered_16x1().lift(); }

FiberedConfiguration fibered_6x2_4x1() {
  std::vector<double> thetas;
  for (int n = 0; n <= 4; ++n) thetas.push_back(n * kPi / 3);
  return equatorial_triple(thetas, deg(300));
}

Configuration make_6x2_4x1() { return fibered_6x2_4x1().lift(); }

CohnWooReconstruction make_cohn_woo() {
  CohnWooReconstruction out;
  auto circles = printed_cohn_woo();
  Signature::Counts layout;
  for (const auto& c : circles) ++layout[c.thetas.size()];
  out.printed_signature = Signature(layout);

  for (const auto& c : circles) {
    const double norm_sq = std::norm(c.a) + c.t * c.t;
    if (std::abs(norm_sq - 1.0) > tol::kConstructed) out.printed_norm_violations.push_back({describe(c), norm_sq});
  }
  out.stages.push_back(evaluate("printed", "fiber data exactly as printed", circles));
  out.printed_antipodal_pairs = out.stages.back().antipodal_pairs;

  // Repair 1: the first line's base "a=0, t=0" is the north pole a=0, t=1.
  circles[0].t = 1.0;
  out.stages.push_back(evaluate("north-pole", "first line read as a=0, t=1", circles));

  // Repair 2: fourth-line bases rescaled to |a| = sqrt(3)/2, keeping their phases.
  for (auto& c : circles) {
    if (c.label == "line4") c.a *= (std::sqrt(3.0) / 2) / std::abs(c.a);
  }
  out.stages.push_back(
      evaluate("renormalized", "fourth-line bases rescaled to modulus sqrt(3)/2", circles));

  // Repair 3: fourth-line angle set {0, pi/2} replaced by {0, pi}.
  for (auto& c : circles) {
    if (c.label == "line4") c.thetas = {0, kPi};
  }
  out.stages.push_back(evaluate("antipodal-angles", "fourth-line angles set to {0, pi}", circles));

  for (const auto& c : circles) {
    out.fibered.circles.push_back(Circle{S2Point<double>::from_complex(c.a, c.t), c.thetas, {}});
  }
  out.candidate = Configuration(lift_printed(circles));

  const RepairStage& last = out.stages.back();
  const bool kissing = last.report && last.report->is_kissing;
  if (kissing && last.point_count == CohnWooReconstruction::kTargetPoints &&
      last.antipodal_pairs == CohnWooReconstruction::kTargetPairs) {
    out.status = CohnWooReconstruction::Status::Verified;
    return out;
  }

  out.status = CohnWooReconstruction::Status::Diagnosed;
  std::ostringstream msg;
  msg << "repaired candidate has " << last.point_count << " points (target "
      << CohnWooReconstruction::kTargetPoints << ")";
  out.diagnosis.push_back(msg.str());
  msg.str("");
  msg << "antipodal pairs: " << last.antipodal_pairs << " (target "
      << CohnWooReconstruction::kTargetPairs << ")";
  out.diagnosis.push_back(msg.str());
  if (last.report) {
    msg.str("");
    msg << "min chord " << last.report->min_distance << " at pair ("
        << last.report->argmin_pair.first << "," << last.report->argmin_pair.second << "); "
        << last.report->violations.size() << " violating pairs";
    out.diagnosis.push_back(msg.str());
    for (const auto& [pair, d] : last.report->violations) {
      msg.str("");
      msg << "violation (" << pair.first << "," << pair.second << ") chord " << d;
      out.diagnosis.push_back(msg.str());
    }
  } else {
    out.diagnosis.push_back("repaired candidate is not on the unit sphere");
  }
  return out;
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{"24cell", "3x6", "16x1", "6x2+4x1", "cohn-woo-22"};
  return ids;
}

CatalogEntry make_catalog_entry(const std::string& id) {
  if (id == "24cell") return {id, "24-cell, six circles of four", make_24cell(), std::nullopt, true};
  if (id == "3x6") return {id, "three equatorial circles of six", make_3x6(), fibered_3x6(), true};
  if (id == "16x1") {
    return {id, "3x5+1x1 with theta = 0,61,122,185,250 / 300 degrees", make_16x1(), fibered_16x1(), true};
  }
  if (id == "6x2+4x1") {
    return {id, "3x5+1x1 with theta = n pi/3 / 300 degrees", make_6x2_4x1(), fibered_6x2_4x1(), true};
  }
  if (id == "cohn-woo-22") {
    auto cw = make_cohn_woo();
    const bool verified = cw.status == CohnWooReconstruction::Status::Verified;
    return {id, verified ? "22-point configuration, verified" : "22-point configuration, reconstruction diagnosed",
            cw.candidate, cw.fibered, verified};
  }
  throw DomainError("unknown catalog id '" + id + "'");
}

}  // namespace kiss4d
