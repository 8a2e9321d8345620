// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/segmentation.hpp"

#include <algorithm>
#include <string>

#include "polsar/errors.hpp"

namespace polsar {

SegmentMap SegmentMap::from_labels(LabelRaster labels) {
  const auto data = labels.data();
  std::int32_t max_id = -1;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::int32_t v = data[i];
    if (v < -1) {
      throw ValidationError("segment label below -1 at pixel " + std::to_string(i));
    }
    max_id = std::max(max_id, v);
  }
  if (max_id < 0) throw ValidationError("segment map has no segments");

  const int r = max_id + 1;
  std::vector<int> counts(static_cast<std::size_t>(r), 0);
  for (const std::int32_t v : data) {
    if (v >= 0) ++counts[static_cast<std::size_t>(v)];
  }
  for (int s = 0; s < r; ++s) {
    if (counts[static_cast<std::size_t>(s)] == 0) {
      throw ValidationError("segment ids are not contiguous: segment " +
                            std::to_string(s) + " is empty");
    }
  }

  SegmentMap map;
  map.offsets_.assign(static_cast<std::size_t>(r) + 1, 0);
  for (int s = 0; s < r; ++s) {
    map.offsets_[static_cast<std::size_t>(s) + 1] =
        map.offsets_[static_cast<std::size_t>(s)] + counts[static_cast<std::size_t>(s)];
  }
  map.pixel_indices_.resize(static_cast<std::size_t>(map.offsets_.back()));
  std::vector<int> fill(map.offsets_.begin(), map.offsets_.end() - 1);
  for (int i = 0; i < static_cast<int>(data.size()); ++i) {
    const std::int32_t v = data[static_cast<std::size_t>(i)];
    if (v >= 0) {
      map.pixel_indices_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = i;
    }
  }
  map.labels_ = std::move(labels);
  return map;
}

std::span<const int> SegmentMap::pixels_of(int segment_id) const {
  const auto begin = offsets_[static_cast<std::size_t>(segment_id)];
  const auto end = offsets_[static_cast<std::size_t>(segment_id) + 1];
  return {pixel_indices_.data() + begin, static_cast<std::size_t>(end - begin)};
}

SegmentMap grid_segment(int width, int height, int tile) {
  if (tile < 1) throw ValidationError("tile size must be at least 1");
  if (width <= 0 || height <= 0) {
    throw ValidationError("raster dimensions must be positive");
  }
  const int tiles_x = (width + tile - 1) / tile;
  LabelRaster labels(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      labels.at(x, y) = (y / tile) * tiles_x + (x / tile);
    }
  }
  return SegmentMap::from_labels(std::move(labels));
}

}  // namespace polsar
