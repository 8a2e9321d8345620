// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/assess.hpp"

#include <cmath>

#include "polsar/errors.hpp"
#include "polsar/special.hpp"

namespace polsar {

ConfusionMatrix::ConfusionMatrix(int k)
    : k_(k), counts_(static_cast<std::size_t>(k) * k, 0) {
  if (k <= 0) throw ValidationError("confusion matrix needs at least one class");
}

ConfusionMatrix ConfusionMatrix::from_rasters(const LabelRaster& predicted,
                                              const LabelRaster& truth, int k,
                                              const LabelRaster* mask) {
  if (predicted.width() != truth.width() || predicted.height() != truth.height()) {
    throw DimensionMismatch("predicted and truth rasters differ in size");
  }
  if (mask != nullptr &&
      (mask->width() != truth.width() || mask->height() != truth.height())) {
    throw DimensionMismatch("mask raster differs in size");
  }
  ConfusionMatrix cm(k);
  for (int p = 0; p < truth.pixel_count(); ++p) {
    if (mask != nullptr && mask->at(p) < 0) continue;
    const std::int32_t t = truth.at(p);
    const std::int32_t pr = predicted.at(p);
    if (t < 0 || t >= k) {
      if (t >= k) throw ValidationError("truth label out of range");
      continue;  // masked truth pixel
    }
    if (pr < 0 || pr >= k) {
      if (pr >= k) throw ValidationError("predicted label out of range");
      ++cm.skipped_;  // unclassified prediction
      continue;
    }
    ++cm.counts_[static_cast<std::size_t>(pr) * k + t];
  }
  if (cm.total() == 0) throw ValidationError("no assessable pixels");
  return cm;
}

std::int64_t ConfusionMatrix::count(int predicted, int truth) const {
  return counts_[static_cast<std::size_t>(predicted) * k_ + truth];
}

void ConfusionMatrix::add(int predicted, int truth, std::int64_t n) {
  counts_[static_cast<std::size_t>(predicted) * k_ + truth] += n;
}

std::int64_t ConfusionMatrix::total() const {
  std::int64_t t = 0;
  for (const auto c : counts_) t += c;
  return t;
}

std::int64_t ConfusionMatrix::diagonal() const {
  std::int64_t t = 0;
  for (int i = 0; i < k_; ++i) t += count(i, i);
  return t;
}

std::int64_t ConfusionMatrix::row_sum(int i) const {
  std::int64_t t = 0;
  for (int j = 0; j < k_; ++j) t += count(i, j);
  return t;
}

std::int64_t ConfusionMatrix::col_sum(int j) const {
  std::int64_t t = 0;
  for (int i = 0; i < k_; ++i) t += count(i, j);
  return t;
}

KappaReport kappa(const ConfusionMatrix& cm) {
  const double n = static_cast<double>(cm.total());
  if (!(n > 0.0)) throw ValidationError("empty confusion matrix");
  const int k = cm.k();

  std::vector<double> row(static_cast<std::size_t>(k));  // p_i+ (predicted marginal)
  std::vector<double> col(static_cast<std::size_t>(k));  // p_+j (truth marginal)
  for (int i = 0; i < k; ++i) {
    row[static_cast<std::size_t>(i)] = cm.row_sum(i) / n;
    col[static_cast<std::size_t>(i)] = cm.col_sum(i) / n;
  }

  // theta1 from the integer totals so that perfect agreement is exactly 1
  // (summing per-class proportions can round to just above 1).
  const double theta1 = static_cast<double>(cm.diagonal()) / n;
  double theta2 = 0.0;  // chance agreement
  double theta3 = 0.0;
  double theta4 = 0.0;
  for (int i = 0; i < k; ++i) {
    const double p_ii = cm.count(i, i) / n;
    theta2 += row[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(i)];
    theta3 += p_ii * (row[static_cast<std::size_t>(i)] + col[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double p_ij = cm.count(i, j) / n;
      const double sum = row[static_cast<std::size_t>(j)] + col[static_cast<std::size_t>(i)];
      theta4 += p_ij * sum * sum;
    }
  }

  const double denom = 1.0 - theta2;
  if (!(denom > 0.0)) {
    throw DegenerateMarginals("chance agreement is 1; kappa undefined");
  }

  KappaReport report;
  report.overall_accuracy = theta1;
  report.kappa_hat = (theta1 - theta2) / denom;
  report.variance =
      (theta1 * (1.0 - theta1) / (denom * denom) +
       2.0 * (1.0 - theta1) * (2.0 * theta1 * theta2 - theta3) / (denom * denom * denom) +
       (1.0 - theta1) * (1.0 - theta1) * (theta4 - 4.0 * theta2 * theta2) /
           (denom * denom * denom * denom)) /
      n;
  if (report.variance < 0.0 && report.variance > -1e-18) report.variance = 0.0;
  return report;
}

KappaEquality kappa_equality_test(const KappaReport& a, const KappaReport& b) {
  const double var_sum = a.variance + b.variance;
  if (!(var_sum > 0.0)) throw ZeroVariance("both kappa variances are zero");
  KappaEquality out;
  out.z = (a.kappa_hat - b.kappa_hat) / std::sqrt(var_sum);
  out.p_value = 2.0 * normal_sf(std::abs(out.z));
  return out;
}

double non_rejection_rate(std::span<const SegmentAssignment> assignments,
                          double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must lie in (0, 1)");
  }
  std::int64_t classified = 0;
  std::int64_t kept = 0;
  for (const auto& a : assignments) {
    if (!a.classified()) continue;
    ++classified;
    if (a.winning.p_value >= alpha) ++kept;
  }
  if (classified == 0) return 0.0;
  return static_cast<double>(kept) / static_cast<double>(classified);
}

Palette default_palette(int k) {
  // Fixed table of distinguishable colors, repeated if k ever exceeds it.
  static const std::array<std::uint8_t, 3> table[] = {
      {31, 119, 180}, {255, 127, 14}, {44, 160, 44},  {214, 39, 40},
      {148, 103, 189}, {140, 86, 75}, {227, 119, 194}, {127, 127, 127},
      {188, 189, 34}, {23, 190, 207}, {174, 199, 232}, {255, 187, 120},
  };
  Palette p;
  for (int i = 0; i < k; ++i) {
    p.class_colors.push_back(table[static_cast<std::size_t>(i) % std::size(table)]);
  }
  return p;
}

RgbImage render_class_map(std::span<const SegmentAssignment> assignments,
                          const SegmentMap& segmap, const Palette& palette) {
  for (const auto& a : assignments) {
    if (a.classified() &&
        a.class_index >= static_cast<int>(palette.class_colors.size())) {
      throw PaletteMissingClass("palette has no color for class index " +
                                std::to_string(a.class_index));
    }
  }
  return render_label_map(assignment_labels(assignments, segmap), palette);
}

RgbImage render_label_map(const LabelRaster& labels, const Palette& palette) {
  RgbImage img(labels.width(), labels.height());
  for (int p = 0; p < labels.pixel_count(); ++p) {
    const std::int32_t v = labels.at(p);
    const auto& color = (v >= 0 && v < static_cast<int>(palette.class_colors.size()))
                            ? palette.class_colors[static_cast<std::size_t>(v)]
                            : palette.unclassified;
    auto* px = img.pixel(p);
    px[0] = color[0];
    px[1] = color[1];
    px[2] = color[2];
  }
  return img;
}

GrayImage render_pvalue_map(std::span<const SegmentAssignment> assignments,
                            const SegmentMap& segmap, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must lie in (0, 1)");
  }
  GrayImage img(segmap.width(), segmap.height(), 0);
  for (const auto& a : assignments) {
    if (!a.classified() || a.winning.p_value < alpha) continue;
    for (const int p : segmap.pixels_of(a.segment_id)) {
      img.at(p) = 255;
    }
  }
  return img;
}

}  // namespace polsar
