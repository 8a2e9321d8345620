// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "polsar/raster.hpp"

namespace polsar {

/// Partition of the image support into disjoint non-empty segments with ids
/// 0..r-1; -1 marks pixels outside every segment.
class SegmentMap {
 public:
  SegmentMap() = default;

  /// Validates the labels: ids must form the contiguous range 0..r-1 and each
  /// segment must be non-empty. Throws ValidationError otherwise.
  static SegmentMap from_labels(LabelRaster labels);

  int width() const { return labels_.width(); }
  int height() const { return labels_.height(); }
  int segment_count() const { return static_cast<int>(offsets_.size()) - 1; }

  /// Pixel indices (row-major) belonging to a segment, ascending.
  std::span<const int> pixels_of(int segment_id) const;

  const LabelRaster& labels() const { return labels_; }

 private:
  LabelRaster labels_;
  std::vector<int> pixel_indices_;  // grouped by segment
  std::vector<int> offsets_;        // segment_count()+1 offsets into pixel_indices_
};

/// Regular grid partition with tiles of tile x tile pixels, row-major ids;
/// edge tiles are truncated when the dimensions are not multiples of tile.
SegmentMap grid_segment(int width, int height, int tile);

}  // namespace polsar
