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


#ifndef SPLKIT_BENCH_H_
#define SPLKIT_BENCH_H_

#include <map>
#include <string>
#include <vector>

#include "splkit/distortion.h"
#include "splkit/image.h"
#include "splkit/structure_loss.h"

namespace splkit {

struct BenchImage {
  std::string name;
  ImageBuffer image;  // RGB
};

struct BenchRecord {
  std::string image;
  DistortionKind kind = DistortionKind::kDarken;
  double strength = 0.0;
  std::uint64_t seed = 0;
  double spl = 0.0;
  double ssim = 0.0;
  double mse = 0.0;
  double psnr = 0.0;  // +inf for identical images
};

struct KindSummary {
  double spl = 0.0;
  double ssim = 0.0;
  double mse = 0.0;
  double psnr = 0.0;  // mean over records, +inf if any record is +inf
  int count = 0;
};

struct BenchReport {
  // Sorted by image name, then by distortion kind order.
  std::vector<BenchRecord> records;
  std::map<DistortionKind, KindSummary> summary;
  // Mean SPL of every non-structural kind (color_change, darken) is below
  // the mean SPL of every structural kind (lens_blur, white_noise, jitter).
  bool ordering_pass = false;
};

bool IsStructural(DistortionKind kind);

// Distorts every image with every spec and scores the pair. Each record's
// seed is spec.seed + image index, so stochastic distortions differ
// between images but the whole run is reproducible.
BenchReport RunBench(const std::vector<BenchImage>& images,
                     const std::vector<DistortionSpec>& specs,
                     const SplParams& params);

// One spec per kind at its default strength.
std::vector<DistortionSpec> DefaultBenchSpecs(std::uint64_t seed);

// JSON document: {"records": [...], "summary": {"per_kind": {...},
// "ordering_pass": bool}}. Infinite PSNR is written as null.
std::string BenchReportToJson(const BenchReport& report);

}  // namespace splkit

#endif  // SPLKIT_BENCH_H_
