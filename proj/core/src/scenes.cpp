// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/scenes.hpp"

#include <algorithm>
#include <cmath>

#include "polsar/errors.hpp"
#include "polsar/parallel.hpp"

namespace polsar {

namespace {

HermitianMatrix upper3(double d0, cx a01, cx a02, double d1, cx a12, double d2) {
  const cx upper[6] = {cx(d0, 0.0), a01, a02, cx(d1, 0.0), a12, cx(d2, 0.0)};
  return HermitianMatrix::from_upper(3, upper);
}

std::vector<ClassPreset> build_presets() {
  std::vector<ClassPreset> p;
  p.push_back({"River",
               upper3(2.98e-3, {5.31e-6, 8.11e-5}, {3.47e-3, 3.42e-4},
                      3.40e-4, {4.47e-6, 1.39e-4}, 1.19e-2)});
  p.push_back({"Caatinga",
               upper3(1.11e-1, {-3.10e-3, -1.58e-3}, {1.98e-2, 1.65e-3},
                      3.40e-2, {-1.41e-3, 1.87e-3}, 9.47e-2)});
  p.push_back({"Prepared Soil",
               upper3(1.05e-2, {-5.39e-6, -2.37e-4}, {7.53e-3, 1.75e-3},
                      8.46e-4, {-3.38e-5, 1.32e-4}, 1.14e-2)});
  p.push_back({"Soybean 1",
               upper3(3.40e-2, {-1.79e-3, -1.86e-3}, {-3.6e-4, -7.58e-3},
                      5.16e-3, {4.38e-4, 4.28e-4}, 5.38e-2)});
  p.push_back({"Soybean 2",
               upper3(4.31e-2, {-1.76e-3, -1.32e-3}, {-1.78e-4, -1.73e-3},
                      9.26e-3, {6.55e-4, 1.27e-3}, 4.35e-2)});
  p.push_back({"Soybean 3",
               upper3(7.53e-2, {-4.25e-3, -7.66e-3}, {5.87e-4, -1.36e-3},
                      1.47e-2, {-2.18e-4, 1.21e-3}, 3.70e-2)});
  p.push_back({"Tillage",
               upper3(3.53e-2, {1.20e-3, 1.02e-4}, {1.64e-2, -2.65e-3},
                      3.05e-3, {4.48e-4, 1.88e-4}, 3.29e-2)});
  p.push_back({"Corn 1",
               upper3(1.15e-1, {-3.95e-3, -3.57e-3}, {9.13e-3, -4.86e-3},
                      1.33e-2, {3.34e-3, 2.83e-3}, 1.47e-1)});
  p.push_back({"Corn 2",
               upper3(4.19e-2, {1.08e-3, -1.01e-3}, {9.24e-3, -3.68e-3},
                      1.02e-2, {2.43e-4, 3.31e-4}, 5.71e-2)});
  return p;
}

}  // namespace

const std::vector<ClassPreset>& class_presets() {
  static const std::vector<ClassPreset> presets = build_presets();
  return presets;
}

const ClassPreset& preset(std::string_view name) {
  for (const auto& p : class_presets()) {
    if (p.name == name) return p;
  }
  throw UnknownClass("unknown class: " + std::string(name));
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : class_presets()) names.push_back(p.name);
  return names;
}

MosaicSpec MosaicSpec::standard(std::uint64_t seed) {
  MosaicSpec spec;
  const auto names = preset_names();
  spec.layout = {
      {names[0], names[1], names[2]},
      {names[3], names[4], names[5]},
      {names[6], names[7], names[8]},
  };
  spec.tile_size = 150;
  spec.looks = 4;
  spec.seed = seed;
  return spec;
}

SimulatedScene simulate_mosaic(const MosaicSpec& spec) {
  if (spec.layout.empty() || spec.layout.front().empty()) {
    throw ValidationError("mosaic layout is empty");
  }
  const int rows = spec.rows();
  const int cols = spec.cols();
  for (const auto& row : spec.layout) {
    if (static_cast<int>(row.size()) != cols) {
      throw ValidationError("mosaic layout rows have different lengths");
    }
  }
  if (spec.tile_size < 1) throw ValidationError("tile size must be at least 1");

  // Distinct class list in layout order of first appearance.
  std::vector<std::string> class_names;
  for (const auto& row : spec.layout) {
    for (const auto& name : row) {
      if (std::find(class_names.begin(), class_names.end(), name) == class_names.end()) {
        class_names.push_back(name);
      }
    }
  }

  const int width = spec.width();
  const int height = spec.height();
  const int q = preset(spec.layout.front().front()).sigma.dim();
  SimulatedScene scene{CovarianceRaster(width, height, q, spec.looks),
                       LabelRaster(width, height), std::move(class_names)};

  struct Tile {
    int row, col, label;
    const HermitianMatrix* sigma;
  };
  std::vector<Tile> tiles;
  for (int tr = 0; tr < rows; ++tr) {
    for (int tc = 0; tc < cols; ++tc) {
      const std::string& name = spec.layout[static_cast<std::size_t>(tr)][static_cast<std::size_t>(tc)];
      const int label = static_cast<int>(
          std::find(scene.class_names.begin(), scene.class_names.end(), name) -
          scene.class_names.begin());
      tiles.push_back({tr, tc, label, &preset(name).sigma});
    }
  }

  // Every tile draws from its own child stream, so tile order and thread
  // count cannot change the output.
  parallel_for(static_cast<int>(tiles.size()), 0, [&](int begin, int end) {
    for (int t = begin; t < end; ++t) {
      const Tile& tile = tiles[static_cast<std::size_t>(t)];
      const MultilookSampler sampler(*tile.sigma, spec.looks);
      Stream stream = Stream::child(spec.seed, StreamDomain::MosaicTile,
                                    static_cast<std::uint64_t>(t));
      for (int dy = 0; dy < spec.tile_size; ++dy) {
        const int y = tile.row * spec.tile_size + dy;
        for (int dx = 0; dx < spec.tile_size; ++dx) {
          const int x = tile.col * spec.tile_size + dx;
          const int p = y * width + x;
          sampler.sample_into(stream, scene.raster.pixel(p));
          scene.truth.at(p) = tile.label;
        }
      }
    }
  });
  return scene;
}

PrototypeSet simulate_prototypes(std::span<const std::string> names,
                                 int pixels_per_class, int looks,
                                 std::uint64_t seed) {
  if (pixels_per_class < 1) {
    throw ValidationError("pixels_per_class must be at least 1");
  }
  std::vector<PrototypeEntry> entries;
  entries.reserve(names.size());
  for (std::size_t c = 0; c < names.size(); ++c) {
    const ClassPreset& cls = preset(names[c]);
    const int q = cls.sigma.dim();
    const MultilookSampler sampler(cls.sigma, looks);
    Stream stream = Stream::child(seed, StreamDomain::PrototypeClass,
                                  static_cast<std::uint64_t>(c));
    CovarianceAccumulator acc(q);
    std::vector<double> amps;
    amps.reserve(static_cast<std::size_t>(pixels_per_class) * q);
    std::vector<cx> buf(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < pixels_per_class; ++i) {
      sampler.sample_into(stream, buf);
      acc.add(buf);
      for (int j = 0; j < q; ++j) {
        amps.push_back(std::sqrt(buf[static_cast<std::size_t>(j) * q + j].real()));
      }
    }
    PrototypeEntry entry;
    entry.name = cls.name;
    entry.wishart = CovarianceEstimate{acc.mean(), pixels_per_class,
                                       static_cast<double>(looks)};
    entry.gaussian = estimate_gaussian(amps, q, pixels_per_class);
    entries.push_back(std::move(entry));
  }
  return PrototypeSet(std::move(entries));
}

}  // namespace polsar
