// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polsar/classifier.hpp"
#include "polsar/raster.hpp"
#include "polsar/wishart.hpp"

namespace polsar {

/// Built-in L-band class covariance (q = 3; channels HH, HV, VV).
struct ClassPreset {
  std::string name;
  HermitianMatrix sigma;
};

/// The nine built-in classes, in canonical order: River, Caatinga,
/// Prepared Soil, Soybean 1-3, Tillage, Corn 1-2.
const std::vector<ClassPreset>& class_presets();

/// Lookup by name; throws UnknownClass.
const ClassPreset& preset(std::string_view name);

std::vector<std::string> preset_names();

/// Specification of a simulated mosaic scene: a grid of class tiles, each
/// tile_size x tile_size pixels of independent multilook draws.
struct MosaicSpec {
  std::vector<std::vector<std::string>> layout;
  int tile_size = 150;
  int looks = 4;
  std::uint64_t seed = 0;

  /// The standard scene: all nine classes in a 3x3 grid of 150x150 tiles,
  /// four looks (a 450x450 image).
  static MosaicSpec standard(std::uint64_t seed);

  int rows() const { return static_cast<int>(layout.size()); }
  int cols() const { return layout.empty() ? 0 : static_cast<int>(layout.front().size()); }
  int width() const { return cols() * tile_size; }
  int height() const { return rows() * tile_size; }
};

struct SimulatedScene {
  CovarianceRaster raster;
  LabelRaster truth;  // index into the distinct class list, layout order of first appearance
  std::vector<std::string> class_names;
};

/// Simulates the mosaic: every tile draws tile_size^2 independent multilook
/// pixels from its class's covariance on a dedicated child stream, so the
/// output is reproducible and tiles can be generated in parallel.
/// Truth labels record the generating class per pixel.
SimulatedScene simulate_mosaic(const MosaicSpec& spec);

/// Fresh ML prototypes (Wishart and amplitude-Gaussian estimates) for the
/// named classes. Prototype streams live in their own domain, disjoint from
/// every mosaic stream of any seed.
PrototypeSet simulate_prototypes(std::span<const std::string> names,
                                 int pixels_per_class, int looks,
                                 std::uint64_t seed);

}  // namespace polsar
