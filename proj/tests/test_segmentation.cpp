// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <polsar/errors.hpp>
#include <polsar/segmentation.hpp>

using namespace polsar;

TEST_SUITE_BEGIN("segmentation");

TEST_CASE("grid segment counts for the 450x450 scene") {
  CHECK(grid_segment(450, 450, 5).segment_count() == 8100);
  CHECK(grid_segment(450, 450, 10).segment_count() == 2025);
  CHECK(grid_segment(450, 450, 15).segment_count() == 900);
  CHECK(grid_segment(450, 450, 30).segment_count() == 225);

  const SegmentMap map = grid_segment(450, 450, 15);
  for (int s = 0; s < map.segment_count(); ++s) {
    CHECK(map.pixels_of(s).size() == 225);
  }
}

TEST_CASE("grid segment truncates edge tiles") {
  const SegmentMap map = grid_segment(7, 5, 3);
  CHECK(map.segment_count() == 6);
  // tiles are 3,3,1 wide and 3,2 tall
  CHECK(map.pixels_of(0).size() == 9);
  CHECK(map.pixels_of(1).size() == 9);
  CHECK(map.pixels_of(2).size() == 3);
  CHECK(map.pixels_of(3).size() == 6);
  CHECK(map.pixels_of(4).size() == 6);
  CHECK(map.pixels_of(5).size() == 2);

  std::size_t total = 0;
  for (int s = 0; s < 6; ++s) total += map.pixels_of(s).size();
  CHECK(total == 35);
}

TEST_CASE("pixel indices are ascending and match the labels") {
  const SegmentMap map = grid_segment(8, 8, 4);
  for (int s = 0; s < map.segment_count(); ++s) {
    const auto pixels = map.pixels_of(s);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      if (i > 0) CHECK(pixels[i] > pixels[i - 1]);
      CHECK(map.labels().at(pixels[i]) == s);
    }
  }
}

TEST_CASE("validation of label rasters") {
  LabelRaster ok(4, 2, 0);
  ok.at(3, 1) = 1;
  CHECK_NOTHROW(SegmentMap::from_labels(ok));

  LabelRaster gap(4, 2, 0);
  gap.at(3, 1) = 2;  // id 1 missing
  CHECK_THROWS_AS(SegmentMap::from_labels(gap), ValidationError);

  LabelRaster below(4, 2, 0);
  below.at(0, 0) = -2;
  CHECK_THROWS_AS(SegmentMap::from_labels(below), ValidationError);

  LabelRaster empty(4, 2, -1);
  CHECK_THROWS_AS(SegmentMap::from_labels(empty), ValidationError);

  // Masked pixels are allowed alongside segments.
  LabelRaster masked(4, 2, 0);
  masked.at(0, 0) = -1;
  const SegmentMap m = SegmentMap::from_labels(masked);
  CHECK(m.segment_count() == 1);
  CHECK(m.pixels_of(0).size() == 7);
}

TEST_SUITE_END();
