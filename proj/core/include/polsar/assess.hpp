// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polsar/classifier.hpp"
#include "polsar/raster.hpp"

namespace polsar {

/// k x k contingency counts; counts(i, j) = pixels of true class j assigned
/// class i. Pixels masked (or labeled outside 0..k-1 as predicted -1) in
/// either raster are skipped and tallied separately.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(int k);

  static ConfusionMatrix from_rasters(const LabelRaster& predicted,
                                      const LabelRaster& truth, int k,
                                      const LabelRaster* mask = nullptr);

  int k() const { return k_; }
  std::int64_t count(int predicted, int truth) const;
  void add(int predicted, int truth, std::int64_t n = 1);

  std::int64_t total() const;
  std::int64_t diagonal() const;
  std::int64_t row_sum(int i) const;     // predicted-class marginal
  std::int64_t col_sum(int j) const;     // true-class marginal
  std::int64_t skipped() const { return skipped_; }

 private:
  int k_ = 0;
  std::vector<std::int64_t> counts_;
  std::int64_t skipped_ = 0;
};

struct KappaReport {
  double overall_accuracy = 0.0;
  double kappa_hat = 0.0;
  double variance = 0.0;
};

/// Overall accuracy, kappa and its delta-method variance.
///
/// With cell proportions p_ij = n_ij / n, row marginals p_i+ and column
/// marginals p_+j:
///   theta1 = sum_i p_ii                       (= overall accuracy p_o)
///   theta2 = sum_i p_i+ p_+i                  (= chance agreement p_e)
///   theta3 = sum_i p_ii (p_i+ + p_+i)
///   theta4 = sum_ij p_ij (p_j+ + p_+i)^2
///   kappa  = (theta1 - theta2) / (1 - theta2)
///   var    = [ theta1 (1-theta1) / (1-theta2)^2
///            + 2 (1-theta1) (2 theta1 theta2 - theta3) / (1-theta2)^3
///            + (1-theta1)^2 (theta4 - 4 theta2^2) / (1-theta2)^4 ] / n
/// Throws DegenerateMarginals when p_e = 1.
KappaReport kappa(const ConfusionMatrix& cm);

struct KappaEquality {
  double z = 0.0;
  double p_value = 1.0;
};

/// z = (kappa1 - kappa2) / sqrt(var1 + var2) with a two-sided normal p-value.
/// Throws ZeroVariance when both variances are zero.
KappaEquality kappa_equality_test(const KappaReport& a, const KappaReport& b);

/// Fraction of classified segments whose winning p-value is >= alpha
/// (the null hypothesis "segment matches its assigned prototype" not
/// rejected at level alpha).
double non_rejection_rate(std::span<const SegmentAssignment> assignments,
                          double alpha);

struct Palette {
  std::vector<std::array<std::uint8_t, 3>> class_colors;
  std::array<std::uint8_t, 3> unclassified{0, 0, 0};
};

/// Fixed, distinguishable default colors for k classes.
Palette default_palette(int k);

/// Per-pixel color of the pixel's segment class; throws PaletteMissingClass
/// when the palette has fewer colors than the highest assigned class index.
RgbImage render_class_map(std::span<const SegmentAssignment> assignments,
                          const SegmentMap& segmap, const Palette& palette);

/// Renders a label raster with the same palette (-1 = unclassified color).
RgbImage render_label_map(const LabelRaster& labels, const Palette& palette);

/// White (255) where the segment's winning p-value is >= alpha, black
/// otherwise; unclassified segments and out-of-segment pixels are black.
GrayImage render_pvalue_map(std::span<const SegmentAssignment> assignments,
                            const SegmentMap& segmap, double alpha);

}  // namespace polsar
