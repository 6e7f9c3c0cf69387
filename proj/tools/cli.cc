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


#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "splkit/bench.h"
#include "splkit/color.h"
#include "splkit/distortion.h"
#include "splkit/errors.h"
#include "splkit/mask_upsample.h"
#include "splkit/png_io.h"
#include "splkit/refine.h"
#include "splkit/structure_loss.h"

namespace splkit::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct LossFlags {
  int window = 11;
  double rho = 1e-4;
  double lambda = 1e-4;

  SplParams ToParams() const {
    Require(window >= 3 && window % 2 == 1,
            "--window must be an odd size >= 3, got " + std::to_string(window));
    SplParams p;
    p.radius = (window - 1) / 2;
    p.rho = rho;
    p.lambda_cpl = lambda;
    p.Validate();
    return p;
  }
};

void AddLossFlags(CLI::App* cmd, LossFlags& flags) {
  cmd->add_option("--window", flags.window, "Window size (odd)")
      ->capture_default_str();
  cmd->add_option("--rho", flags.rho, "Fit regularizer")->capture_default_str();
  cmd->add_option("--lambda", flags.lambda, "Color loss weight")
      ->capture_default_str();
}

Json LossJson(const LossReport& r) {
  return Json{{"spl", r.spl}, {"cpl", r.cpl}, {"total", r.total}};
}

Json ParamsJson(const SplParams& p) {
  return Json{{"window", 2 * p.radius + 1},
              {"rho", p.rho},
              {"lambda", p.lambda_cpl}};
}

std::string FormatLoss(const LossReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "spl=%.10g cpl=%.10g total=%.10g", r.spl,
                r.cpl, r.total);
  return buf;
}

MaskMap LoadMask(const fs::path& path) {
  return MaskMap::FromPlane(IntensityOf(LoadImage(path)));
}

void RequireSameShape(const ImageBuffer& a, const ImageBuffer& b,
                      const std::string& what) {
  Require(a.SameShape(b),
          what + ": " + std::to_string(a.width()) + "x" +
              std::to_string(a.height()) + "x" + std::to_string(a.channels()) +
              " vs " + std::to_string(b.width()) + "x" +
              std::to_string(b.height()) + "x" + std::to_string(b.channels()));
}

// Saves a non-negative map scaled so its maximum becomes white.
void SaveNormalizedMap(const ImageBuffer& map, const fs::path& path) {
  ImageBuffer out = map;
  double peak = 0.0;
  for (double v : out.data()) peak = std::max(peak, v);
  if (peak > 0.0) {
    for (double& v : out.data()) v /= peak;
  }
  SaveImage(out, path);
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!f) throw IoError("cannot write " + path.string());
}

struct MetricArgs {
  std::string source, edit, mask, spl_map, cpl_map;
  LossFlags loss;
  bool json = false;
};

int CmdMetric(const MetricArgs& a, std::ostream& out) {
  const SplParams params = a.loss.ToParams();
  const ImageBuffer source = LoadImage(a.source);
  const ImageBuffer edit = LoadImage(a.edit);
  RequireSameShape(edit, source, "source and edit differ");
  std::optional<MaskMap> mask;
  if (!a.mask.empty()) mask = LoadMask(a.mask);
  const MaskMap* mp = mask ? &*mask : nullptr;
  if (mp != nullptr) Require(mp->Matches(source), "mask size differs from images");

  const LossReport r = TotalLoss(edit, source, params, LossMasks::Both(mp));
  if (!a.spl_map.empty()) SaveNormalizedMap(r.spl_map, a.spl_map);
  if (!a.cpl_map.empty()) SaveNormalizedMap(r.cpl_map, a.cpl_map);
  if (a.json) {
    Json doc = LossJson(r);
    doc["params"] = ParamsJson(params);
    out << doc.dump(2) << "\n";
  } else {
    out << FormatLoss(r) << "\n";
  }
  return kExitOk;
}

struct RefineArgs {
  std::string source, edit, output, mask;
  LossFlags loss;
  int iters = 100;
  double lr = 1.0;
  double momentum = 0.9;
  bool json = false;
  bool trace = false;
};

int CmdRefine(const RefineArgs& a, std::ostream& out) {
  RefineConfig config;
  config.spl_params = a.loss.ToParams();
  config.iterations = a.iters;
  config.learning_rate = a.lr;
  config.momentum = a.momentum;
  config.record_trace = a.trace;
  config.Validate();

  const ImageBuffer source = LoadImage(a.source);
  const ImageBuffer edit = LoadImage(a.edit);
  RequireSameShape(edit, source, "source and edit differ");
  std::optional<MaskMap> mask;
  if (!a.mask.empty()) mask = LoadMask(a.mask);
  const MaskMap* mp = mask ? &*mask : nullptr;
  if (mp != nullptr) Require(mp->Matches(source), "mask size differs from images");

  const RefineResult result = Refine(source, edit, mp, config);
  SaveImage(result.image, a.output);
  if (a.json) {
    Json doc;
    doc["initial"] = LossJson(result.trace.initial);
    doc["final"] = LossJson(result.trace.final);
    doc["iterations"] = config.iterations;
    doc["learning_rate"] = config.learning_rate;
    doc["momentum"] = config.momentum;
    doc["params"] = ParamsJson(config.spl_params);
    if (a.trace) doc["trace"] = result.trace.total_loss;
    out << doc.dump(2) << "\n";
  } else {
    out << "initial " << FormatLoss(result.trace.initial) << "\n";
    out << "final   " << FormatLoss(result.trace.final) << "\n";
  }
  return kExitOk;
}

struct UpsampleArgs {
  std::string coarse, guide, output;
  UpsampleConfig config;
};

int CmdUpsampleMask(const UpsampleArgs& a, std::ostream& out) {
  a.config.Validate();
  const MaskMap coarse = LoadMask(a.coarse);
  const ImageBuffer guide = LoadImage(a.guide);
  const MaskMap mask = UpsampleMask(coarse, guide, a.config);
  SaveImage(mask.ToPlane(), a.output);
  out << "wrote " << mask.width() << "x" << mask.height() << " mask to "
      << a.output << "\n";
  return kExitOk;
}

struct DistortArgs {
  std::string image, kind, output;
  std::optional<double> strength;
  std::uint64_t seed = 0;
};

int CmdDistort(const DistortArgs& a, std::ostream& out) {
  const auto kind = ParseDistortionKind(a.kind);
  Require(kind.has_value(), "unknown distortion kind '" + a.kind + "'");
  DistortionSpec spec = DefaultDistortion(*kind, a.seed);
  if (a.strength) spec.strength = *a.strength;
  spec.Validate();
  const ImageBuffer img = ToRgb(LoadImage(a.image));
  SaveImage(ApplyDistortion(img, spec), a.output);
  out << "wrote " << DistortionName(spec.kind) << " (strength "
      << spec.strength << ", seed " << spec.seed << ") to " << a.output << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string corpus, output;
  LossFlags loss;
  std::uint64_t seed = 0;
  double color_change = 0.5;
  double darken = 0.6;
  double blur = 3.0;
  double noise = 0.1;
  double jitter = 3.0;
};

int CmdBench(const BenchArgs& a, std::ostream& out) {
  const SplParams params = a.loss.ToParams();
  const fs::path dir(a.corpus);
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + a.corpus);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string ext = entry.path().extension().string();
    std::ranges::transform(ext, ext.begin(), ::tolower);
    if (entry.is_regular_file() && ext == ".png") files.push_back(entry.path());
  }
  std::ranges::sort(files);
  Require(!files.empty(), "no PNG images in " + a.corpus);

  std::vector<BenchImage> images;
  for (const fs::path& f : files) {
    images.push_back({f.filename().string(), ToRgb(LoadImage(f))});
  }
  std::vector<DistortionSpec> specs = {
      {DistortionKind::kColorChange, a.color_change, a.seed},
      {DistortionKind::kDarken, a.darken, a.seed},
      {DistortionKind::kLensBlur, a.blur, a.seed},
      {DistortionKind::kWhiteNoise, a.noise, a.seed},
      {DistortionKind::kJitter, a.jitter, a.seed}};
  for (const DistortionSpec& s : specs) s.Validate();

  const BenchReport report = RunBench(images, specs, params);
  WriteText(a.output, BenchReportToJson(report));

  for (DistortionKind kind : kAllDistortionKinds) {
    const KindSummary& s = report.summary.at(kind);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-13s spl=%.6g ssim=%.4f psnr=%.2f\n",
                  std::string(DistortionName(kind)).c_str(), s.spl, s.ssim,
                  s.psnr);
    out << buf;
  }
  out << (report.ordering_pass ? "ORDERING-PASS" : "ORDERING-FAIL") << "\n";
  return report.ordering_pass ? kExitOk : kExitOrdering;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Structure and color preservation losses for image edits"};
  app.require_subcommand(1);

  MetricArgs metric;
  auto* m = app.add_subcommand("metric", "Score an edit against its source");
  m->add_option("source", metric.source, "Source PNG")->required();
  m->add_option("edit", metric.edit, "Edited PNG")->required();
  m->add_option("--mask", metric.mask, "Mask PNG restricting both losses");
  m->add_option("--spl-map", metric.spl_map,
                "Write the structure error map (scaled to max) as PNG");
  m->add_option("--cpl-map", metric.cpl_map,
                "Write the color error map (scaled to max) as PNG");
  m->add_flag("--json", metric.json, "Print a JSON report");
  AddLossFlags(m, metric.loss);

  RefineArgs refine;
  auto* r = app.add_subcommand("refine", "Restore source structure in an edit");
  r->add_option("source", refine.source, "Source PNG")->required();
  r->add_option("edit", refine.edit, "Edited PNG")->required();
  r->add_option("output", refine.output, "Output PNG")->required();
  r->add_option("--mask", refine.mask, "Mask PNG restricting both losses");
  r->add_option("--iters", refine.iters, "Gradient steps")->capture_default_str();
  r->add_option("--lr", refine.lr, "Learning rate")->capture_default_str();
  r->add_option("--momentum", refine.momentum, "Heavy-ball momentum")
      ->capture_default_str();
  r->add_flag("--json", refine.json, "Print a JSON report");
  r->add_flag("--trace", refine.trace, "Include per-iteration losses in JSON");
  AddLossFlags(r, refine.loss);

  UpsampleArgs up;
  auto* u = app.add_subcommand("upsample-mask",
                               "Iterative guided upsampling of a coarse mask");
  u->add_option("coarse", up.coarse, "Coarse mask PNG")->required();
  u->add_option("guide", up.guide, "Guide image PNG")->required();
  u->add_option("output", up.output, "Output mask PNG")->required();
  u->add_option("--target", up.config.target_size,
                "Output width (default: guide width)");
  u->add_option("--threshold", up.config.binarize_threshold,
                "Initial binarization threshold")
      ->capture_default_str();
  u->add_option("--radius0", up.config.initial_radius,
                "Guided filter radius at the first level")
      ->capture_default_str();
  u->add_option("--radius-step", up.config.radius_increment,
                "Radius increase per level")
      ->capture_default_str();
  u->add_option("--eps", up.config.guided_eps, "Guided filter regularizer")
      ->capture_default_str();

  DistortArgs distort;
  auto* d = app.add_subcommand("distort", "Apply a benchmark distortion");
  d->add_option("image", distort.image, "Input PNG")->required();
  d->add_option("kind", distort.kind,
                "color_change | darken | lens_blur | white_noise | jitter")
      ->required();
  d->add_option("output", distort.output, "Output PNG")->required();
  d->add_option("--strength", distort.strength,
                "Kind-specific strength (default per kind)");
  d->add_option("--seed", distort.seed, "Random seed")->capture_default_str();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Score every distortion on a corpus");
  b->add_option("corpus", bench.corpus, "Directory of PNG images")->required();
  b->add_option("output", bench.output, "Output JSON report")->required();
  b->add_option("--seed", bench.seed, "Base random seed")->capture_default_str();
  b->add_option("--color-change", bench.color_change, "Hue rotation, half-turns")
      ->capture_default_str();
  b->add_option("--darken", bench.darken, "Brightness factor")
      ->capture_default_str();
  b->add_option("--blur-radius", bench.blur, "Lens blur radius")
      ->capture_default_str();
  b->add_option("--noise-sigma", bench.noise, "White noise sigma")
      ->capture_default_str();
  b->add_option("--jitter", bench.jitter, "Jitter displacement")
      ->capture_default_str();
  AddLossFlags(b, bench.loss);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitContract;
  }

  try {
    if (m->parsed()) return CmdMetric(metric, out);
    if (r->parsed()) return CmdRefine(refine, out);
    if (u->parsed()) return CmdUpsampleMask(up, out);
    if (d->parsed()) return CmdDistort(distort, out);
    if (b->parsed()) return CmdBench(bench, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DecodeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitContract;
  }
  err << "error: no subcommand\n";
  return kExitContract;
}

}  // namespace splkit::cli
