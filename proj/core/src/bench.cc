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


#include "splkit/bench.h"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "splkit/color.h"
#include "splkit/errors.h"
#include "splkit/metrics.h"

namespace splkit {
namespace {

nlohmann::json Number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

int KindOrder(DistortionKind kind) {
  const auto it = std::ranges::find(kAllDistortionKinds, kind);
  return static_cast<int>(it - kAllDistortionKinds.begin());
}

}  // namespace

bool IsStructural(DistortionKind kind) {
  return kind == DistortionKind::kLensBlur ||
         kind == DistortionKind::kWhiteNoise || kind == DistortionKind::kJitter;
}

std::vector<DistortionSpec> DefaultBenchSpecs(std::uint64_t seed) {
  std::vector<DistortionSpec> specs;
  for (DistortionKind kind : kAllDistortionKinds) {
    specs.push_back(DefaultDistortion(kind, seed));
  }
  return specs;
}

BenchReport RunBench(const std::vector<BenchImage>& images,
                     const std::vector<DistortionSpec>& specs,
                     const SplParams& params) {
  Require(!images.empty(), "benchmark corpus is empty");
  Require(!specs.empty(), "benchmark needs at least one distortion");
  params.Validate();

  BenchReport report;
  for (std::size_t idx = 0; idx < images.size(); ++idx) {
    const BenchImage& item = images[idx];
    const ImageBuffer rgb = ToRgb(item.image);
    const ImageBuffer reference = RgbToIntensity(rgb);
    for (DistortionSpec spec : specs) {
      spec.seed += idx;
      const ImageBuffer distorted = ApplyDistortion(rgb, spec);
      const ImageBuffer distorted_i = RgbToIntensity(distorted);
      const MsePsnr mp = ComputeMsePsnr(distorted, rgb);
      BenchRecord rec;
      rec.image = item.name;
      rec.kind = spec.kind;
      rec.strength = spec.strength;
      rec.seed = spec.seed;
      rec.spl = StructurePreservationLoss(distorted_i, reference, params).value;
      rec.ssim = Ssim(distorted_i, reference);
      rec.mse = mp.mse;
      rec.psnr = mp.psnr;
      report.records.push_back(std::move(rec));
    }
  }
  std::ranges::stable_sort(report.records, [](const BenchRecord& a,
                                              const BenchRecord& b) {
    if (a.image != b.image) return a.image < b.image;
    return KindOrder(a.kind) < KindOrder(b.kind);
  });

  for (const BenchRecord& rec : report.records) {
    KindSummary& s = report.summary[rec.kind];
    s.spl += rec.spl;
    s.ssim += rec.ssim;
    s.mse += rec.mse;
    s.psnr += rec.psnr;
    ++s.count;
  }
  for (auto& [kind, s] : report.summary) {
    s.spl /= s.count;
    s.ssim /= s.count;
    s.mse /= s.count;
    s.psnr /= s.count;
  }

  bool has_both = false;
  bool pass = true;
  for (const auto& [lo_kind, lo] : report.summary) {
    if (IsStructural(lo_kind)) continue;
    for (const auto& [hi_kind, hi] : report.summary) {
      if (!IsStructural(hi_kind)) continue;
      has_both = true;
      pass = pass && lo.spl < hi.spl;
    }
  }
  report.ordering_pass = has_both && pass;
  return report;
}

std::string BenchReportToJson(const BenchReport& report) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const BenchRecord& r : report.records) {
    nlohmann::ordered_json j;
    j["image"] = r.image;
    j["kind"] = std::string(DistortionName(r.kind));
    j["strength"] = r.strength;
    j["seed"] = r.seed;
    j["spl"] = r.spl;
    j["ssim"] = r.ssim;
    j["mse"] = r.mse;
    j["psnr"] = Number(r.psnr);
    records.push_back(std::move(j));
  }
  nlohmann::ordered_json per_kind = nlohmann::ordered_json::object();
  for (DistortionKind kind : kAllDistortionKinds) {
    const auto it = report.summary.find(kind);
    if (it == report.summary.end()) continue;
    const KindSummary& s = it->second;
    per_kind[std::string(DistortionName(kind))] = {
        {"count", s.count},
        {"spl", s.spl},
        {"ssim", s.ssim},
        {"mse", s.mse},
        {"psnr", Number(s.psnr)},
        {"structural", IsStructural(kind)}};
  }
  nlohmann::ordered_json doc;
  doc["records"] = std::move(records);
  doc["summary"] = {{"per_kind", std::move(per_kind)},
                    {"ordering_pass", report.ordering_pass}};
  return doc.dump(2) + "\n";
}

}  // namespace splkit
