// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/raster.hpp"

#include "polsar/errors.hpp"

namespace polsar {

CovarianceRaster::CovarianceRaster(int width, int height, int q, double looks)
    : width_(width), height_(height), q_(q), looks_(looks),
      data_(static_cast<std::size_t>(width) * height * q * q) {
  if (width <= 0 || height <= 0 || q <= 0) {
    throw ValidationError("raster dimensions must be positive");
  }
  if (!(looks > 0.0)) throw ValidationError("looks must be positive");
}

HermitianMatrix CovarianceRaster::pixel_matrix(int index) const {
  CovarianceAccumulator acc(q_);
  acc.add(pixel(index));
  return acc.mean();
}

void CovarianceRaster::set_pixel(int index, const HermitianMatrix& m) {
  if (m.dim() != q_) throw DimensionMismatch("pixel dimension mismatch");
  auto dst = pixel(index);
  auto src = m.data();
  std::copy(src.begin(), src.end(), dst.begin());
}

LabelRaster::LabelRaster(int width, int height, std::int32_t fill)
    : width_(width), height_(height),
      labels_(static_cast<std::size_t>(width) * height, fill) {
  if (width <= 0 || height <= 0) {
    throw ValidationError("raster dimensions must be positive");
  }
}

AmplitudeImage::AmplitudeImage(int width, int height, int q)
    : width_(width), height_(height), q_(q),
      data_(static_cast<std::size_t>(width) * height * q) {
  if (width <= 0 || height <= 0 || q <= 0) {
    throw ValidationError("image dimensions must be positive");
  }
}

RgbImage::RgbImage(int width, int height)
    : width_(width), height_(height),
      data_(static_cast<std::size_t>(width) * height * 3) {
  if (width <= 0 || height <= 0) {
    throw ValidationError("image dimensions must be positive");
  }
}

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height),
      data_(static_cast<std::size_t>(width) * height, fill) {
  if (width <= 0 || height <= 0) {
    throw ValidationError("image dimensions must be positive");
  }
}

}  // namespace polsar
