// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polsar/assess.hpp"
#include "polsar/classifier.hpp"
#include "polsar/raster.hpp"

namespace polsar {

/// Deterministic run metadata embedded in every output file (no timestamps,
/// so re-running a command with the same inputs is byte-identical).
struct Provenance {
  std::string tool = "polsarclass";
  std::string version;
  std::string config_hash;
  std::optional<std::uint64_t> seed;
};

/// FNV-1a 64-bit hash, hex-encoded; used for config hashes.
std::string fnv1a_hex(std::string_view text);

// Covariance raster format: one text line holding a JSON header object
//   {"magic":"polsar-cov","version":1,"width":W,"height":H,"q":Q,"looks":L,...}
// terminated by '\n', then width*height pixels row-major; each pixel is Q*Q
// complex entries in row-major matrix order, each complex two little-endian
// IEEE-754 doubles (re, im). The full matrix is stored; the reader verifies
// Hermitian symmetry within tolerance and renormalizes exactly.
void write_covariance_raster(const std::filesystem::path& path,
                             const CovarianceRaster& raster,
                             const Provenance& provenance);
CovarianceRaster read_covariance_raster(const std::filesystem::path& path);

// Label raster format: same header style with "magic":"labels", then
// width*height little-endian int32 values; -1 = masked.
void write_label_raster(const std::filesystem::path& path,
                        const LabelRaster& labels, const Provenance& provenance);
LabelRaster read_label_raster(const std::filesystem::path& path);

// Prototype sets are JSON documents; matrices are Q x Q arrays of [re, im]
// pairs; each class carries its sample_size and looks.
void write_prototypes(const std::filesystem::path& path, const PrototypeSet& protos,
                      const Provenance& provenance);
PrototypeSet read_prototypes(const std::filesystem::path& path);

// Assignment tables are CSV with provenance comment lines ('#' prefix) and
// header segment_id,class,statistic,p_value,log10_p,kind,reason;
// unclassified rows have class "Unclassified" and a non-empty reason.
void write_assignments_csv(const std::filesystem::path& path,
                           std::span<const SegmentAssignment> assignments,
                           std::span<const std::string> class_names,
                           const Provenance& provenance);

struct AssignmentRow {
  int segment_id = -1;
  std::string class_name;
  double statistic = 0.0;
  double p_value = 1.0;
  double log10_p = 0.0;
  std::string kind;
  std::string reason;

  bool classified() const { return reason.empty(); }
};
std::vector<AssignmentRow> read_assignments_csv(const std::filesystem::path& path);

void write_palette(const std::filesystem::path& path, const Palette& palette,
                   std::span<const std::string> class_names,
                   const Provenance& provenance);

struct AssessReport {
  double overall_accuracy = 0.0;
  double kappa_hat = 0.0;
  double kappa_variance = 0.0;
  double alpha = 0.05;
  double non_rejection = 0.0;
  double unclassified_fraction = 0.0;
  std::vector<std::string> class_names;
  std::vector<std::vector<std::int64_t>> confusion;  // [predicted][truth]
};
void write_report(const std::filesystem::path& path, const AssessReport& report,
                  const Provenance& provenance);
AssessReport read_report(const std::filesystem::path& path);

}  // namespace polsar
