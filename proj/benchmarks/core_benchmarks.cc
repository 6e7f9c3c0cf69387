// Copyright 2026 The splkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "splkit/box_filter.h"
#include "splkit/color.h"
#include "splkit/mask_upsample.h"
#include "splkit/structure_loss.h"

namespace splkit {
namespace {

ImageBuffer Noise(int size, int channels, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ImageBuffer img(size, size, channels);
  for (double& v : img.data()) v = u(rng);
  return img;
}

void BM_BoxSum(benchmark::State& state) {
  const ImageBuffer p = Noise(static_cast<int>(state.range(0)), 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(BoxSum(p, 5));
  state.SetItemsProcessed(state.iterations() * p.pixel_count());
}
BENCHMARK(BM_BoxSum)->Arg(256)->Arg(512)->Arg(1024);

void BM_StructureLoss(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const ImageBuffer a = Noise(size, 1, 2), b = Noise(size, 1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(StructurePreservationLoss(a, b, SplParams{}).value);
  }
  state.SetItemsProcessed(state.iterations() * a.pixel_count());
}
BENCHMARK(BM_StructureLoss)->Arg(256)->Arg(512);

void BM_LossAndGradient(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const ImageBuffer a = Noise(size, 3, 4), b = Noise(size, 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateLoss(a, b, SplParams{}));
  state.SetItemsProcessed(state.iterations() * a.pixel_count());
}
BENCHMARK(BM_LossAndGradient)->Arg(128)->Arg(256)->Arg(512);

void BM_GuidedFilter(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const ImageBuffer in = Noise(size, 1, 6), guide = Noise(size, 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(GuidedFilter(in, guide, 8, 1e-4));
  state.SetItemsProcessed(state.iterations() * in.pixel_count());
}
BENCHMARK(BM_GuidedFilter)->Arg(256)->Arg(512);

void BM_UpsampleMask(benchmark::State& state) {
  const ImageBuffer guide = Noise(512, 3, 8);
  MaskMap coarse(16, 16, 0.0);
  for (int y = 4; y < 12; ++y) for (int x = 4; x < 12; ++x) coarse.set(y, x, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(UpsampleMask(coarse, guide, UpsampleConfig{}));
  }
}
BENCHMARK(BM_UpsampleMask);

}  // namespace
}  // namespace splkit

BENCHMARK_MAIN();
