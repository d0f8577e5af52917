#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kiss4d/configuration.hpp"

namespace kiss4d {

/// The 24 vertices of the 24-cell: the 8 unit axis vectors and the 16 points (+-1,+-1,+-1,+-1)/2.
Configuration make_24cell();

/// Three equatorial circles at azimuths 0, 2pi/3, 4pi/3 with six points each, spaced by pi/3.
FiberedConfiguration fibered_3x6();
Configuration make_3x6();

/// Three equatorial circles at theta = 0, 61, 122, 185, 250 degrees plus the north-pole circle at 300.
FiberedConfiguration fibered_16x1();
Configuration make_16x1();

/// As fibered_16x1 but with theta = n pi / 3, n = 0..4, on the equatorial circles.
FiberedConfiguration fibered_6x2_4x1();
Configuration make_6x2_4x1();

/// One stage of the 22-point reconstruction.
struct RepairStage {
  std::string name;
  std::string description;
  bool on_sphere = false;              // every lifted point unit-norm
  std::size_t point_count = 0;
  std::size_t antipodal_pairs = 0;
  std::optional<VerificationReport> report;  // present once every point lies on S^3
};

/// Printed circle whose (a, t) is off the unit sphere.
struct NormViolation {
  std::string circle;
  double norm_sq = 0;  // |a|^2 + t^2 as printed
};

struct CohnWooReconstruction {
  enum class Status { Verified, Diagnosed };

  Status status = Status::Diagnosed;
  Configuration candidate;             // the fully repaired 22-point candidate
  FiberedConfiguration fibered;        // its fibered form
  std::vector<NormViolation> printed_norm_violations;
  std::size_t printed_antipodal_pairs = 0;
  Signature printed_signature;         // circle sizes of the printed layout
  std::vector<RepairStage> stages;
  std::vector<std::string> diagnosis;  // empty iff status == Verified

  static constexpr std::size_t kTargetPoints = 22;
  static constexpr std::size_t kTargetPairs = 11;
};

CohnWooReconstruction make_cohn_woo();

struct CatalogEntry {
  std::string id;
  std::string description;
  Configuration configuration;
  std::optional<FiberedConfiguration> fibered;
  bool verified = true;
};

/// Stable identifiers: 24cell, 3x6, 16x1, 6x2+4x1, cohn-woo-22.
const std::vector<std::string>& catalog_ids();
CatalogEntry make_catalog_entry(const std::string& id);

}  // namespace kiss4d
