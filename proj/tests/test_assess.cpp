// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <polsar/assess.hpp>
#include <polsar/errors.hpp>
#include <polsar/segmentation.hpp>

#include "test_util.hpp"

using namespace polsar;
using testutil::rel_diff;

TEST_SUITE_BEGIN("assess");

TEST_CASE("confusion matrix from rasters") {
  LabelRaster truth(4, 2, 0);
  truth.at(2, 0) = 1;
  truth.at(3, 0) = 1;
  truth.at(2, 1) = 1;
  truth.at(3, 1) = 1;

  SUBCASE("perfect prediction is diagonal") {
    const ConfusionMatrix cm = ConfusionMatrix::from_rasters(truth, truth, 2);
    CHECK(cm.total() == 8);
    CHECK(cm.diagonal() == 8);
    CHECK(cm.count(0, 1) == 0);
  }

  SUBCASE("constant prediction fills one row") {
    LabelRaster pred(4, 2, 0);
    const ConfusionMatrix cm = ConfusionMatrix::from_rasters(pred, truth, 2);
    CHECK(cm.count(0, 0) == 4);
    CHECK(cm.count(0, 1) == 4);
    CHECK(cm.count(1, 1) == 0);
  }

  SUBCASE("unclassified predictions are skipped and counted") {
    LabelRaster pred = truth;
    pred.at(0, 0) = -1;
    const ConfusionMatrix cm = ConfusionMatrix::from_rasters(pred, truth, 2);
    CHECK(cm.total() == 7);
    CHECK(cm.skipped() == 1);
  }

  SUBCASE("masked pixels are excluded from the counts") {
    LabelRaster pred(4, 2, 0);  // wrong on the class-1 half
    LabelRaster mask(4, 2, 0);
    mask.at(2, 0) = -1;
    mask.at(3, 0) = -1;
    const ConfusionMatrix cm = ConfusionMatrix::from_rasters(pred, truth, 2, &mask);
    CHECK(cm.total() == 6);
    CHECK(cm.count(0, 1) == 2);  // only the unmasked class-1 pixels remain
  }

  SUBCASE("dimension and range validation") {
    LabelRaster small(2, 2, 0);
    CHECK_THROWS_AS(ConfusionMatrix::from_rasters(small, truth, 2),
                    DimensionMismatch);
    LabelRaster bad = truth;
    bad.at(0, 0) = 7;
    CHECK_THROWS_AS(ConfusionMatrix::from_rasters(bad, truth, 2), ValidationError);
  }
}

TEST_CASE("kappa basics") {
  SUBCASE("perfect agreement") {
    ConfusionMatrix cm(3);
    cm.add(0, 0, 10);
    cm.add(1, 1, 20);
    cm.add(2, 2, 30);
    const KappaReport r = kappa(cm);
    CHECK(r.overall_accuracy == 1.0);
    CHECK(r.kappa_hat == 1.0);
    CHECK(r.variance == 0.0);
  }

  SUBCASE("perfect agreement stays exactly 1 with many classes") {
    // Nine unequal diagonal blocks once rounded per-class proportions to
    // just above 1; the ratio of integer totals must not.
    ConfusionMatrix cm(9);
    for (int i = 0; i < 9; ++i) cm.add(i, i, 22500 + i * 137);
    const KappaReport r = kappa(cm);
    CHECK(r.overall_accuracy == 1.0);
    CHECK(r.kappa_hat == 1.0);
  }

  SUBCASE("agreement exactly at chance") {
    // Marginals are independent: p_o = p_e = 0.5, so kappa = 0.
    ConfusionMatrix cm(2);
    cm.add(0, 0, 40);
    cm.add(0, 1, 40);
    cm.add(1, 0, 10);
    cm.add(1, 1, 10);
    const KappaReport r = kappa(cm);
    CHECK(r.overall_accuracy == 0.5);
    CHECK(r.kappa_hat == 0.0);
  }

  SUBCASE("hand-computed two-class example") {
    // counts [[20, 5], [10, 15]]: p_o = 0.7, p_e = 0.5, kappa = 0.4, and the
    // delta-method variance is 0.016128 (cross-checked below with the
    // equivalent Fleiss-Cohen-Everitt form).
    ConfusionMatrix cm(2);
    cm.add(0, 0, 20);
    cm.add(0, 1, 5);
    cm.add(1, 0, 10);
    cm.add(1, 1, 15);
    const KappaReport r = kappa(cm);
    CHECK(r.overall_accuracy == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(r.kappa_hat == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(r.variance == doctest::Approx(0.016128).epsilon(1e-12));

    // Independent route: var = [A + B - C] / (n (1-pe)^4) with
    // A = sum_i p_ii ((1-pe) - (p_+i + p_i+)(1-po))^2,
    // B = (1-po)^2 sum_{i != j} p_ij (p_+i + p_j+)^2,
    // C = (po pe - 2 pe + po)^2.
    const double n = 50.0;
    const double p[2][2] = {{20 / n, 5 / n}, {10 / n, 15 / n}};
    const double row[2] = {p[0][0] + p[0][1], p[1][0] + p[1][1]};
    const double col[2] = {p[0][0] + p[1][0], p[0][1] + p[1][1]};
    const double po = p[0][0] + p[1][1];
    const double pe = row[0] * col[0] + row[1] * col[1];
    double A = 0.0, B = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double t = (1 - pe) - (col[i] + row[i]) * (1 - po);
      A += p[i][i] * t * t;
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (i == j) continue;
        const double t = col[i] + row[j];
        B += p[i][j] * t * t;
      }
    }
    B *= (1 - po) * (1 - po);
    const double C = (po * pe - 2 * pe + po) * (po * pe - 2 * pe + po);
    const double fleiss = (A + B - C) / (n * std::pow(1 - pe, 4));
    CHECK(rel_diff(r.variance, fleiss) < 1e-12);
  }

  SUBCASE("degenerate marginals") {
    ConfusionMatrix cm(1);
    cm.add(0, 0, 100);
    CHECK_THROWS_AS(kappa(cm), DegenerateMarginals);
  }
}

TEST_CASE("kappa equality test") {
  SUBCASE("identical reports") {
    KappaReport a{0.8, 0.75, 1e-5};
    const KappaEquality e = kappa_equality_test(a, a);
    CHECK(e.z == 0.0);
    CHECK(e.p_value == 1.0);
  }

  SUBCASE("published-style comparison") {
    // kappa 0.8346 (var 1.253e-5) vs 0.6544 (var 2.081e-5):
    // z = 31.208434864931248 (mpmath), overwhelmingly significant.
    KappaReport a{0.8660, 0.8346, 1.253e-5};
    KappaReport b{0.7136, 0.6544, 2.081e-5};
    const KappaEquality e = kappa_equality_test(a, b);
    CHECK(rel_diff(e.z, 31.208434864931248) < 1e-12);
    CHECK(e.p_value < 1e-200);
  }

  SUBCASE("zero variances rejected") {
    KappaReport a{1.0, 1.0, 0.0};
    CHECK_THROWS_AS(kappa_equality_test(a, a), ZeroVariance);
  }
}

TEST_CASE("non-rejection rate") {
  std::vector<SegmentAssignment> assignments(4);
  for (int i = 0; i < 4; ++i) {
    assignments[static_cast<std::size_t>(i)].segment_id = i;
    assignments[static_cast<std::size_t>(i)].class_index = 0;
    assignments[static_cast<std::size_t>(i)].winning.p_value = 1.0;
  }
  CHECK(non_rejection_rate(assignments, 0.05) == 1.0);

  for (auto& a : assignments) a.winning.p_value = 0.0;
  CHECK(non_rejection_rate(assignments, 0.05) == 0.0);

  assignments[0].winning.p_value = 0.5;
  assignments[1].winning.p_value = 0.049;
  assignments[2].class_index = -1;  // unclassified: excluded from the base
  CHECK(non_rejection_rate(assignments, 0.05) == doctest::Approx(1.0 / 3.0));

  CHECK_THROWS_AS(non_rejection_rate(assignments, 0.0), ValidationError);
  CHECK_THROWS_AS(non_rejection_rate(assignments, 1.0), ValidationError);
}

TEST_CASE("class map rendering") {
  const SegmentMap segmap = grid_segment(4, 2, 2);
  std::vector<SegmentAssignment> assignments(2);
  assignments[0].segment_id = 0;
  assignments[0].class_index = 0;
  assignments[1].segment_id = 1;
  assignments[1].class_index = 1;

  const Palette palette = default_palette(2);
  const RgbImage img = render_class_map(assignments, segmap, palette);
  CHECK(img.width() == 4);
  CHECK(img.height() == 2);
  // Exact two-tone boundary between x=1 and x=2.
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 4; ++x) {
      const auto& expect = palette.class_colors[x < 2 ? 0 : 1];
      const auto* px = img.pixel(y * 4 + x);
      CHECK(px[0] == expect[0]);
      CHECK(px[1] == expect[1]);
      CHECK(px[2] == expect[2]);
    }
  }

  // Re-rendering is byte-identical.
  const RgbImage again = render_class_map(assignments, segmap, palette);
  CHECK(std::equal(img.data().begin(), img.data().end(), again.data().begin()));

  assignments[1].class_index = 7;
  CHECK_THROWS_AS(render_class_map(assignments, segmap, palette),
                  PaletteMissingClass);
}

TEST_CASE("p-value map rendering") {
  const SegmentMap segmap = grid_segment(4, 2, 2);
  std::vector<SegmentAssignment> assignments(2);
  assignments[0].segment_id = 0;
  assignments[0].class_index = 0;
  assignments[0].winning.p_value = 1.0;
  assignments[1].segment_id = 1;
  assignments[1].class_index = 0;
  assignments[1].winning.p_value = 1.0;

  GrayImage white = render_pvalue_map(assignments, segmap, 0.05);
  for (int p = 0; p < 8; ++p) CHECK(white.at(p) == 255);

  assignments[0].winning.p_value = 0.0;
  assignments[1].class_index = -1;  // unclassified renders black
  GrayImage black = render_pvalue_map(assignments, segmap, 0.05);
  for (int p = 0; p < 8; ++p) CHECK(black.at(p) == 0);
}

TEST_SUITE_END();
