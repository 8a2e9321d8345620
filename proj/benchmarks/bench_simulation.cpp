// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <polsar/classifier.hpp>
#include <polsar/scenes.hpp>
#include <polsar/segmentation.hpp>

using namespace polsar;

namespace {

void BM_MultilookPixel(benchmark::State& state) {
  const MultilookSampler sampler(preset("Corn 1").sigma, 4.0);
  Stream stream(1);
  std::vector<cx> buf(9);
  for (auto _ : state) {
    sampler.sample_into(stream, buf);
    benchmark::DoNotOptimize(buf.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MultilookPixel);

void BM_SimulateTile(benchmark::State& state) {
  MosaicSpec spec;
  spec.layout = {{"Soybean 2"}};
  spec.tile_size = static_cast<int>(state.range(0));
  spec.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_mosaic(spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SimulateTile)->Arg(32)->Arg(64);

void BM_ClassifyScene(benchmark::State& state) {
  MosaicSpec spec = MosaicSpec::standard(3);
  spec.tile_size = 50;  // 150x150 scene
  const SimulatedScene scene = simulate_mosaic(spec);
  const PrototypeSet protos = simulate_prototypes(preset_names(), 900, 4, 3);
  const SegmentMap segmap =
      grid_segment(scene.raster.width(), scene.raster.height(),
                   static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_segments(scene.raster, segmap, protos,
                                               StatisticKind::Bhattacharyya));
  }
  state.SetItemsProcessed(state.iterations() * segmap.segment_count());
}
BENCHMARK(BM_ClassifyScene)->Arg(5)->Arg(15);

}  // namespace
