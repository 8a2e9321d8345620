// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polsar/distances.hpp"
#include "polsar/segmentation.hpp"

namespace polsar {

struct PrototypeEntry {
  std::string name;
  CovarianceEstimate wishart;
  std::optional<GaussianEstimate> gaussian;
};

/// k named class prototypes sharing q and L; class names unique.
class PrototypeSet {
 public:
  PrototypeSet() = default;
  explicit PrototypeSet(std::vector<PrototypeEntry> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int q() const { return q_; }
  double looks() const { return looks_; }
  const PrototypeEntry& entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<PrototypeEntry>& entries() const { return entries_; }
  std::vector<std::string> names() const;
  int index_of(std::string_view name) const;  // -1 when absent

 private:
  std::vector<PrototypeEntry> entries_;
  int q_ = 0;
  double looks_ = 0.0;
};

/// Result for one segment: the argmin class over the per-prototype statistic
/// table, ties broken by the lowest class index. class_index -1 marks a
/// segment that could not be classified; failure carries the reason.
struct SegmentAssignment {
  int segment_id = -1;
  int class_index = -1;
  TestResult winning;
  std::vector<TestResult> all_stats;
  std::string failure;

  bool classified() const { return class_index >= 0; }
};

struct FusedAssignment {
  int segment_id = -1;
  std::vector<int> votes;  // per input kind
  int winner = -1;
};

struct ClassifyOptions {
  double beta = kDefaultRenyiBeta;
  int threads = 0;  // 0 = hardware concurrency
};

/// Minimum-statistic region classification: estimates each segment's
/// covariance by ML over its pixels (m = pixel count), evaluates the chosen
/// statistic against every prototype (n = prototype sample size) and assigns
/// the argmin, attaching the p-value of the winning test. Per-segment
/// numerical failures become unclassified entries instead of aborting.
/// Results are ordered by segment id regardless of the execution schedule.
std::vector<SegmentAssignment> classify_segments(const CovarianceRaster& raster,
                                                 const SegmentMap& segmap,
                                                 const PrototypeSet& protos,
                                                 StatisticKind kind,
                                                 const ClassifyOptions& options = {});

/// Per-pixel square roots of the diagonal (intensity) entries.
/// Throws NegativeIntensity when a diagonal entry is negative.
AmplitudeImage amplitudes(const CovarianceRaster& raster);

/// Majority vote across per-kind assignments (all lists must cover identical
/// segment ids). The modal class wins; when the mode ties, the class chosen by
/// the Bhattacharyya statistic breaks the tie if it is among the tied ones,
/// otherwise the lowest class index. Segments unclassified everywhere stay
/// unclassified (winner -1).
std::vector<FusedAssignment> fuse_majority(
    std::span<const std::vector<SegmentAssignment>> per_kind,
    std::span<const StatisticKind> kinds);

/// Indices of all classes whose p-value is at or above the threshold;
/// possibly empty. Threshold must lie in (0, 1).
std::vector<int> fuzzy_assign(std::span<const TestResult> per_class_stats,
                              double threshold);

/// Expands assignments to a per-pixel label raster; unclassified segments and
/// out-of-segment pixels become -1.
LabelRaster assignment_labels(std::span<const SegmentAssignment> assignments,
                              const SegmentMap& segmap);

}  // namespace polsar
