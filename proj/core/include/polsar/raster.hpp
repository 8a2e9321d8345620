// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polsar/hermitian.hpp"

namespace polsar {

/// Image of q x q Hermitian covariance pixels, stored flat (row-major pixels,
/// row-major q*q entries per pixel).
class CovarianceRaster {
 public:
  CovarianceRaster() = default;
  CovarianceRaster(int width, int height, int q, double looks);

  int width() const { return width_; }
  int height() const { return height_; }
  int q() const { return q_; }
  double looks() const { return looks_; }
  int pixel_count() const { return width_ * height_; }
  int entries_per_pixel() const { return q_ * q_; }

  std::span<cx> pixel(int index) {
    return {data_.data() + static_cast<std::size_t>(index) * entries_per_pixel(),
            static_cast<std::size_t>(entries_per_pixel())};
  }
  std::span<const cx> pixel(int index) const {
    return {data_.data() + static_cast<std::size_t>(index) * entries_per_pixel(),
            static_cast<std::size_t>(entries_per_pixel())};
  }

  HermitianMatrix pixel_matrix(int index) const;
  void set_pixel(int index, const HermitianMatrix& m);

  std::span<const cx> data() const { return data_; }
  std::span<cx> data() { return data_; }

 private:
  int width_ = 0;
  int height_ = 0;
  int q_ = 0;
  double looks_ = 0.0;
  std::vector<cx> data_;
};

/// Integer label image; -1 marks masked pixels.
class LabelRaster {
 public:
  LabelRaster() = default;
  LabelRaster(int width, int height, std::int32_t fill = -1);

  int width() const { return width_; }
  int height() const { return height_; }
  int pixel_count() const { return width_ * height_; }

  std::int32_t& at(int index) { return labels_[static_cast<std::size_t>(index)]; }
  std::int32_t at(int index) const { return labels_[static_cast<std::size_t>(index)]; }
  std::int32_t& at(int x, int y) { return labels_[static_cast<std::size_t>(y) * width_ + x]; }
  std::int32_t at(int x, int y) const { return labels_[static_cast<std::size_t>(y) * width_ + x]; }

  std::span<const std::int32_t> data() const { return labels_; }
  std::span<std::int32_t> data() { return labels_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::int32_t> labels_;
};

/// q real amplitudes per pixel.
class AmplitudeImage {
 public:
  AmplitudeImage() = default;
  AmplitudeImage(int width, int height, int q);

  int width() const { return width_; }
  int height() const { return height_; }
  int q() const { return q_; }
  int pixel_count() const { return width_ * height_; }

  std::span<double> pixel(int index) {
    return {data_.data() + static_cast<std::size_t>(index) * q_, static_cast<std::size_t>(q_)};
  }
  std::span<const double> pixel(int index) const {
    return {data_.data() + static_cast<std::size_t>(index) * q_, static_cast<std::size_t>(q_)};
  }

 private:
  int width_ = 0;
  int height_ = 0;
  int q_ = 0;
  std::vector<double> data_;
};

class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  std::uint8_t* pixel(int index) { return data_.data() + static_cast<std::size_t>(index) * 3; }
  const std::uint8_t* pixel(int index) const {
    return data_.data() + static_cast<std::size_t>(index) * 3;
  }

  std::span<const std::uint8_t> data() const { return data_; }
  std::span<std::uint8_t> data() { return data_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }

  std::uint8_t& at(int index) { return data_[static_cast<std::size_t>(index)]; }
  std::uint8_t at(int index) const { return data_[static_cast<std::size_t>(index)]; }

  std::span<const std::uint8_t> data() const { return data_; }
  std::span<std::uint8_t> data() { return data_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

}  // namespace polsar
