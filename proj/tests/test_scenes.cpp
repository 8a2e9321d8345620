// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <polsar/errors.hpp>
#include <polsar/scenes.hpp>

#include "test_util.hpp"

using namespace polsar;

namespace {

struct UpperTriangle {
  const char* name;
  double d0;
  cx a01, a02;
  double d1;
  cx a12;
  double d2;
};

// Second, independent transcription of the printed class covariances, used as
// a checksum against the library constants.
const UpperTriangle kReference[] = {
    {"River", 2.98e-3, {5.31e-6, 8.11e-5}, {3.47e-3, 3.42e-4},
     3.40e-4, {4.47e-6, 1.39e-4}, 1.19e-2},
    {"Caatinga", 1.11e-1, {-3.10e-3, -1.58e-3}, {1.98e-2, 1.65e-3},
     3.40e-2, {-1.41e-3, 1.87e-3}, 9.47e-2},
    {"Prepared Soil", 1.05e-2, {-5.39e-6, -2.37e-4}, {7.53e-3, 1.75e-3},
     8.46e-4, {-3.38e-5, 1.32e-4}, 1.14e-2},
    {"Soybean 1", 3.40e-2, {-1.79e-3, -1.86e-3}, {-3.6e-4, -7.58e-3},
     5.16e-3, {4.38e-4, 4.28e-4}, 5.38e-2},
    {"Soybean 2", 4.31e-2, {-1.76e-3, -1.32e-3}, {-1.78e-4, -1.73e-3},
     9.26e-3, {6.55e-4, 1.27e-3}, 4.35e-2},
    {"Soybean 3", 7.53e-2, {-4.25e-3, -7.66e-3}, {5.87e-4, -1.36e-3},
     1.47e-2, {-2.18e-4, 1.21e-3}, 3.70e-2},
    {"Tillage", 3.53e-2, {1.20e-3, 1.02e-4}, {1.64e-2, -2.65e-3},
     3.05e-3, {4.48e-4, 1.88e-4}, 3.29e-2},
    {"Corn 1", 1.15e-1, {-3.95e-3, -3.57e-3}, {9.13e-3, -4.86e-3},
     1.33e-2, {3.34e-3, 2.83e-3}, 1.47e-1},
    {"Corn 2", 4.19e-2, {1.08e-3, -1.01e-3}, {9.24e-3, -3.68e-3},
     1.02e-2, {2.43e-4, 3.31e-4}, 5.71e-2},
};

}  // namespace

TEST_SUITE_BEGIN("scenes");

TEST_CASE("preset checksum against an independent transcription") {
  REQUIRE(class_presets().size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& ref = kReference[i];
    const ClassPreset& p = class_presets()[i];
    CHECK(p.name == ref.name);
    CHECK(p.sigma(0, 0) == cx(ref.d0, 0.0));
    CHECK(p.sigma(0, 1) == ref.a01);
    CHECK(p.sigma(0, 2) == ref.a02);
    CHECK(p.sigma(1, 1) == cx(ref.d1, 0.0));
    CHECK(p.sigma(1, 2) == ref.a12);
    CHECK(p.sigma(2, 2) == cx(ref.d2, 0.0));
    // lower triangle filled by conjugation
    CHECK(p.sigma(1, 0) == std::conj(ref.a01));
    CHECK(p.sigma(2, 0) == std::conj(ref.a02));
    CHECK(p.sigma(2, 1) == std::conj(ref.a12));
  }
}

TEST_CASE("every preset is positive definite") {
  for (const auto& p : class_presets()) {
    CHECK_NOTHROW(cholesky_hpd(p.sigma));
  }
}

TEST_CASE("preset lookup") {
  CHECK(preset("River").sigma(0, 0).real() == 2.98e-3);
  CHECK(preset("Corn 2").sigma(0, 0).real() == 4.19e-2);
  CHECK(preset("Corn 2").sigma(1, 1).real() == 1.02e-2);
  CHECK_THROWS_AS(preset("Swamp"), UnknownClass);
}

TEST_CASE("standard scene simulation") {
  const MosaicSpec spec = MosaicSpec::standard(42);
  const SimulatedScene scene = simulate_mosaic(spec);
  CHECK(scene.raster.width() == 450);
  CHECK(scene.raster.height() == 450);
  CHECK(scene.raster.q() == 3);
  CHECK(scene.raster.looks() == 4.0);
  CHECK(scene.class_names.size() == 9);

  // Ground truth partitions the scene into nine 150x150 blocks.
  for (int p = 0; p < scene.truth.pixel_count(); ++p) {
    CHECK(scene.truth.at(p) >= 0);
  }
  CHECK(scene.truth.at(0, 0) == 0);
  CHECK(scene.truth.at(149, 149) == 0);
  CHECK(scene.truth.at(150, 0) == 1);
  CHECK(scene.truth.at(449, 0) == 2);
  CHECK(scene.truth.at(0, 150) == 3);
  CHECK(scene.truth.at(449, 449) == 8);
}

TEST_CASE("single tile layout") {
  MosaicSpec spec;
  spec.layout = {{"River"}};
  spec.tile_size = 2;
  spec.looks = 4;
  spec.seed = 9;
  const SimulatedScene scene = simulate_mosaic(spec);
  CHECK(scene.raster.width() == 2);
  CHECK(scene.raster.height() == 2);
  CHECK(scene.class_names == std::vector<std::string>{"River"});
  for (int p = 0; p < 4; ++p) CHECK(scene.truth.at(p) == 0);
}

TEST_CASE("per-class sample means concentrate on the presets") {
  MosaicSpec spec = MosaicSpec::standard(7);
  spec.tile_size = 60;  // 3600 pixels per class keeps this fast
  const SimulatedScene scene = simulate_mosaic(spec);
  const int n = spec.tile_size * spec.tile_size;
  for (int cls = 0; cls < 9; ++cls) {
    CovarianceAccumulator acc(3);
    for (int p = 0; p < scene.raster.pixel_count(); ++p) {
      if (scene.truth.at(p) == cls) acc.add(scene.raster.pixel(p));
    }
    REQUIRE(acc.count() == n);
    const HermitianMatrix mean = acc.mean();
    const HermitianMatrix& sigma = preset(scene.class_names[cls]).sigma;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double se =
            std::sqrt(sigma(i, i).real() * sigma(j, j).real() / (4.0 * n));
        CHECK(std::abs(mean(i, j) - sigma(i, j)) < 5.0 * se);
      }
    }
  }
}

TEST_CASE("simulation is byte-deterministic and prototype streams are disjoint") {
  MosaicSpec spec;
  spec.layout = {{"River", "Tillage"}};
  spec.tile_size = 16;
  spec.seed = 2026;

  const SimulatedScene first = simulate_mosaic(spec);
  // Generating prototypes in between must not disturb the mosaic stream.
  const std::vector<std::string> names = {"River", "Tillage"};
  const PrototypeSet protos1 = simulate_prototypes(names, 50, 4, 2026);
  const SimulatedScene second = simulate_mosaic(spec);

  REQUIRE(first.raster.data().size() == second.raster.data().size());
  for (std::size_t i = 0; i < first.raster.data().size(); ++i) {
    CHECK(first.raster.data()[i] == second.raster.data()[i]);
  }

  const PrototypeSet protos2 = simulate_prototypes(names, 50, 4, 2026);
  for (int c = 0; c < protos1.size(); ++c) {
    CHECK(testutil::max_abs_diff(protos1.entry(c).wishart.sigma_hat.to_complex(),
                                 protos2.entry(c).wishart.sigma_hat.to_complex()) ==
          0.0);
  }
}

TEST_CASE("prototype estimates") {
  const std::vector<std::string> names = {"Corn 1"};
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    const PrototypeSet protos = simulate_prototypes(names, 900, 4, seed);
    REQUIRE(protos.size() == 1);
    CHECK(protos.entry(0).wishart.sample_size == 900);
    CHECK(protos.entry(0).wishart.looks == 4.0);
    REQUIRE(protos.entry(0).gaussian.has_value());
    CHECK(protos.entry(0).gaussian->sample_size == 900);

    const HermitianMatrix& sigma = preset("Corn 1").sigma;
    const HermitianMatrix& est = protos.entry(0).wishart.sigma_hat;
    double num = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) num += std::norm(est(i, j) - sigma(i, j));
    }
    CHECK(std::sqrt(num) / sigma.frobenius() < 0.05);
  }
}

TEST_CASE("single-pixel prototype equals the draw") {
  const std::vector<std::string> names = {"Soybean 3"};
  const PrototypeSet protos = simulate_prototypes(names, 1, 4, 77);

  Stream replay = Stream::child(77, StreamDomain::PrototypeClass, 0);
  const MultilookSampler sampler(preset("Soybean 3").sigma, 4.0);
  const HermitianMatrix draw = sampler.sample(replay);
  CHECK(testutil::max_abs_diff(protos.entry(0).wishart.sigma_hat.to_complex(),
                               draw.to_complex()) == 0.0);
}

TEST_CASE("layout validation") {
  MosaicSpec spec;
  spec.layout = {{"River", "Tillage"}, {"Corn 1"}};
  CHECK_THROWS_AS(simulate_mosaic(spec), ValidationError);

  MosaicSpec unknown;
  unknown.layout = {{"Atlantis"}};
  CHECK_THROWS_AS(simulate_mosaic(unknown), UnknownClass);

  CHECK_THROWS_AS(simulate_prototypes(std::vector<std::string>{"River"}, 0, 4, 1),
                  ValidationError);
}

TEST_SUITE_END();
