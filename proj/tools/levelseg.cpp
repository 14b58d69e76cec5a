// Copyright 2026 The levelseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// levelseg command line tool: segment single images with one of the level
// set models, generate synthetic test images, and benchmark the models
// over an image corpus. Exit codes: 0 ok, 2 bad flags or parameters,
// 3 input/IO trouble, 4 numerical failure during evolution.

#include <algorithm>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "levelseg/engine.hpp"
#include "levelseg/errors.hpp"
#include "levelseg/io_util.hpp"
#include "levelseg/raster.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace levelseg;

namespace {

constexpr const char* kToolVersion = "0.1.0";

// Hash of the raw double samples; recorded in manifests so a replay can be
// checked for bit-identical phi_final without shipping the field itself.
std::string fnv1a_hex(const ScalarField2D& f) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < f.size(); ++i) {
    const double v = f[i];
    uint64_t bits;
    static_assert(sizeof(bits) == sizeof(double));
    std::memcpy(&bits, &v, sizeof(bits));
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

std::string precise_shape_string(const ShapeSpec& s) {
  char buf[160];
  if (s.kind == ShapeSpec::Kind::kCircle)
    std::snprintf(buf, sizeof(buf), "circle:%.17g,%.17g,%.17g", s.a, s.b, s.c);
  else
    std::snprintf(buf, sizeof(buf), "rect:%.17g,%.17g,%.17g,%.17g", s.a, s.b, s.c, s.d);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t end = s.find(sep, start);
    if (end == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// Everything one segment run needs, before and after default resolution.
struct SegArgs {
  std::string input;
  std::string out_prefix;
  std::string from_manifest;
  std::string algo_text = "chanvese";
  std::vector<std::string> init_texts;
  std::string init_mode_text;  // empty: the algorithm's preferred start
  int iters = -1;              // -1: the algorithm's default budget
  int check_every = 10;
  bool check_every_explicit = false;
  int patience = 3;
  bool converge = true;
  double min_contour_len = kDefaultMinContourLen;
  int max_dim = kDefaultMaxDim;
  AlgorithmParams model;
};

InitMode parse_init_mode(const std::string& text) {
  if (text == "sdf") return InitMode::kSdf;
  if (text == "binary_step") return InitMode::kBinaryStep;
  throw SpecError("--init-mode must be sdf or binary_step, got '" + text + "'");
}

void model_params_to_json(const AlgorithmParams& p, json& j) {
  switch (p.algo) {
    case Algo::kEdgeFlow:
      j["ef_dt"] = p.edgeflow.dt;
      j["ef_sigma"] = p.edgeflow.sigma;
      break;
    case Algo::kChanVese:
      j["cv_lambda_len"] = p.chanvese.lambda_len;
      j["cv_eps"] = p.chanvese.eps.px;
      j["cv_dt"] = p.chanvese.dt;
      j["cv_reinit_every"] = p.chanvese.reinit_every;
      j["cv_reinit_steps"] = p.chanvese.reinit_steps;
      j["cv_reinit_dtau"] = p.chanvese.reinit_dtau;
      break;
    case Algo::kDrlse:
      j["drlse_mu"] = p.drlse.mu;
      j["drlse_lambda_len"] = p.drlse.lambda_len;
      j["drlse_alpha"] = p.drlse.alpha;
      j["drlse_eps"] = p.drlse.eps.px;
      j["drlse_dt"] = p.drlse.dt;
      j["drlse_sigma"] = p.drlse.sigma;
      break;
    case Algo::kRsf:
      j["rsf_sigma_k"] = p.rsf.sigma_k;
      j["rsf_lambda1"] = p.rsf.lambda1;
      j["rsf_lambda2"] = p.rsf.lambda2;
      j["rsf_nu"] = p.rsf.nu;
      j["rsf_mu_reg"] = p.rsf.mu_reg;
      j["rsf_eps"] = p.rsf.eps.px;
      j["rsf_dt"] = p.rsf.dt;
      break;
    case Algo::kLocalized:
      j["loc_radius"] = p.localized.radius;
      j["loc_lambda_len"] = p.localized.lambda_len;
      j["loc_eps"] = p.localized.eps.px;
      j["loc_cfl"] = p.localized.cfl;
      j["loc_reinit_every"] = p.localized.reinit_every;
      j["loc_reinit_steps"] = p.localized.reinit_steps;
      j["loc_reinit_dtau"] = p.localized.reinit_dtau;
      break;
  }
}

void model_params_from_json(const json& j, AlgorithmParams& p) {
  switch (p.algo) {
    case Algo::kEdgeFlow:
      p.edgeflow.dt = j.at("ef_dt");
      p.edgeflow.sigma = j.at("ef_sigma");
      break;
    case Algo::kChanVese:
      p.chanvese.lambda_len = j.at("cv_lambda_len");
      p.chanvese.eps.px = j.at("cv_eps");
      p.chanvese.dt = j.at("cv_dt");
      p.chanvese.reinit_every = j.at("cv_reinit_every");
      p.chanvese.reinit_steps = j.at("cv_reinit_steps");
      p.chanvese.reinit_dtau = j.at("cv_reinit_dtau");
      break;
    case Algo::kDrlse:
      p.drlse.mu = j.at("drlse_mu");
      p.drlse.lambda_len = j.at("drlse_lambda_len");
      p.drlse.alpha = j.at("drlse_alpha");
      p.drlse.eps.px = j.at("drlse_eps");
      p.drlse.dt = j.at("drlse_dt");
      p.drlse.sigma = j.at("drlse_sigma");
      break;
    case Algo::kRsf:
      p.rsf.sigma_k = j.at("rsf_sigma_k");
      p.rsf.lambda1 = j.at("rsf_lambda1");
      p.rsf.lambda2 = j.at("rsf_lambda2");
      p.rsf.nu = j.at("rsf_nu");
      p.rsf.mu_reg = j.at("rsf_mu_reg");
      p.rsf.eps.px = j.at("rsf_eps");
      p.rsf.dt = j.at("rsf_dt");
      break;
    case Algo::kLocalized:
      p.localized.radius = j.at("loc_radius");
      p.localized.lambda_len = j.at("loc_lambda_len");
      p.localized.eps.px = j.at("loc_eps");
      p.localized.cfl = j.at("loc_cfl");
      p.localized.reinit_every = j.at("loc_reinit_every");
      p.localized.reinit_steps = j.at("loc_reinit_steps");
      p.localized.reinit_dtau = j.at("loc_reinit_dtau");
      break;
  }
}

// Pulls every run-affecting field out of a previously written manifest so
// the run can be reproduced bit for bit.
void load_manifest_into(const std::string& path, SegArgs& a) {
  json j;
  try {
    j = json::parse(read_file(path));
    a.input = j.at("input");
    a.algo_text = j.at("algo");
    a.model.algo = parse_algo(a.algo_text);
    a.init_texts = split(j.at("init").get<std::string>(), ';');
    a.init_mode_text = j.at("init_mode");
    a.iters = j.at("max_iters");
    a.check_every = j.at("check_every");
    a.check_every_explicit = true;
    a.patience = j.at("patience");
    a.converge = j.at("enable_convergence");
    a.min_contour_len = j.at("min_contour_len");
    a.max_dim = j.at("max_dim");
    model_params_from_json(j, a.model);
  } catch (const json::exception& e) {
    throw levelseg::ParseError("manifest " + path + ": " + e.what());
  }
}

int run_segment(SegArgs a) {
  if (!a.from_manifest.empty()) load_manifest_into(a.from_manifest, a);
  if (a.input.empty()) throw SpecError("segment: --input is required");
  if (a.out_prefix.empty()) throw SpecError("segment: --out-prefix is required");
  if (a.max_dim < 8) throw SpecError("segment: --max-dim must be at least 8");
  if (a.min_contour_len < 0) throw SpecError("segment: --min-contour-len must be >= 0");

  a.model.algo = parse_algo(a.algo_text);
  const Algo algo = a.model.algo;

  const RasterImage raster = load_pnm(a.input);
  ScalarField2D image = rescale_max_dim(to_grayscale_normalized(raster), a.max_dim);
  const int w = image.width(), h = image.height();

  std::vector<ShapeSpec> shapes;
  for (const auto& t : a.init_texts) shapes.push_back(parse_shape_spec(t));
  if (shapes.empty()) shapes.push_back(default_init_shape(w, h));

  const InitMode mode = a.init_mode_text.empty() ? default_init_mode(algo)
                                                 : parse_init_mode(a.init_mode_text);
  const LevelSetField phi0 = init_levelset(shapes, w, h, mode);

  if (algo == Algo::kLocalized && a.model.localized.radius <= 0.0)
    a.model.localized.radius = default_ball_radius(w, h);

  EvolveOptions opts;
  opts.max_iters = a.iters < 0 ? default_max_iters(algo) : a.iters;
  if (opts.max_iters < 1) throw SpecError("segment: --iters must be >= 1");
  opts.check_every =
      a.check_every_explicit ? a.check_every : std::min(a.check_every, opts.max_iters);
  opts.patience = a.patience;
  opts.enable_convergence = a.converge;

  auto model = make_model(a.model);
  const SegmentationResult res = evolve(image, phi0, *model, opts);
  const std::vector<Contour> kept = filter_by_length(res.contours, a.min_contour_len);

  const std::string overlay_path = a.out_prefix + ".overlay.ppm";
  const std::string csv_path = a.out_prefix + ".contours.csv";
  const std::string svg_path = a.out_prefix + ".contours.svg";
  const std::string manifest_path = a.out_prefix + ".manifest.json";
  if (!fs::path(a.out_prefix).parent_path().empty())
    fs::create_directories(fs::path(a.out_prefix).parent_path());

  write_pnm(render_overlay(image, kept), overlay_path);
  export_contours_csv(kept, csv_path);
  export_contours_svg(kept, w, h, svg_path);

  std::string init_joined;
  for (size_t i = 0; i < shapes.size(); ++i) {
    if (i) init_joined += ';';
    init_joined += precise_shape_string(shapes[i]);
  }

  json m;
  m["tool_version"] = kToolVersion;
  m["algo"] = algo_name(algo);
  m["input"] = a.input;
  m["input_width"] = w;
  m["input_height"] = h;
  m["max_dim"] = a.max_dim;
  m["init"] = init_joined;
  m["init_mode"] = mode == InitMode::kSdf ? "sdf" : "binary_step";
  m["init_c0"] = kBinaryStepHeight;
  m["max_iters"] = opts.max_iters;
  m["check_every"] = opts.check_every;
  m["patience"] = opts.patience;
  m["enable_convergence"] = opts.enable_convergence;
  m["min_contour_len"] = a.min_contour_len;
  model_params_to_json(a.model, m);
  m["iterations_run"] = res.iterations_run;
  m["converged"] = res.converged;
  m["wall_ms"] = res.wall_ms;
  m["contours_total"] = res.contours.size();
  m["contours_kept"] = kept.size();
  m["out_overlay"] = overlay_path;
  m["out_csv"] = csv_path;
  m["out_svg"] = svg_path;
  m["phi_hash"] = fnv1a_hex(res.phi_final);
  atomic_write_file(manifest_path, m.dump(2) + "\n");

  std::printf("%s: %d iterations (%s), %zu/%zu contours kept, %.1f ms -> %s.*\n",
              algo_name(algo), res.iterations_run,
              res.converged ? "converged" : "budget exhausted", kept.size(),
              res.contours.size(), res.wall_ms, a.out_prefix.c_str());
  return 0;
}

struct SynthArgs {
  std::string kind = "disk";
  std::string size = "128x128";
  std::string out;
  std::string truth;
  std::string center;
  SynthSpec spec;
};

int run_synth(SynthArgs a) {
  if (a.out.empty()) throw SpecError("synth: --out is required");
  a.spec.kind = parse_synth_kind(a.kind);
  if (std::sscanf(a.size.c_str(), "%dx%d", &a.spec.width, &a.spec.height) != 2)
    throw SpecError("synth: --size must look like 128x128, got '" + a.size + "'");
  if (!a.center.empty() &&
      std::sscanf(a.center.c_str(), "%lf,%lf", &a.spec.cx, &a.spec.cy) != 2)
    throw SpecError("synth: --center must look like 64,64, got '" + a.center + "'");

  write_pnm(to_raster_gray8(synth(a.spec)), a.out);
  if (!a.truth.empty()) write_pnm(truth_mask(a.spec), a.truth);
  std::printf("synth %s %dx%d -> %s%s%s\n", synth_kind_name(a.spec.kind).c_str(),
              a.spec.width, a.spec.height, a.out.c_str(), a.truth.empty() ? "" : ", ",
              a.truth.c_str());
  return 0;
}

struct BenchArgs {
  std::string corpus;
  std::string algos = "edgeflow,chanvese,drlse,rsf,localized";
  std::string report;
  bool make_default_corpus = false;
  AlgorithmParams model;
};

// The bundled corpus: the synthetic scenes the test suite measures, so a
// checkout can benchmark without any binary assets.
void write_default_corpus(const fs::path& dir) {
  fs::create_directories(dir);
  const auto emit = [&](const char* stem, const SynthSpec& spec) {
    write_pnm(to_raster_gray8(synth(spec)), dir / (std::string(stem) + ".pgm"));
    write_pnm(truth_mask(spec), dir / (std::string(stem) + ".truth.pgm"));
  };
  SynthSpec disk;
  disk.kind = SynthKind::kDisk;
  disk.noise_sigma = 0.05;
  disk.seed = 42;
  emit("disk", disk);

  // Disk placed so the illumination gain makes the global region means
  // nearly coincide: mean-based segmentation stalls here, local fitting
  // does not.  fg 0.3 at x=24 sits right where the ramp-lifted background
  // average lands.
  SynthSpec ramp;
  ramp.kind = SynthKind::kRamp;
  ramp.foreground = 0.3;
  ramp.background = 0.2;
  ramp.slope = 0.3;
  ramp.cx = 24;
  ramp.cy = 64;
  ramp.radius = 20;
  ramp.noise_sigma = 0.02;
  ramp.seed = 5;
  emit("ramp", ramp);

  SynthSpec steps;
  steps.kind = SynthKind::kTwoRegion;
  steps.noise_sigma = 0.05;
  steps.seed = 7;
  emit("tworegion", steps);

  SynthSpec small;
  small.kind = SynthKind::kDisk;
  small.width = 96;
  small.height = 96;
  small.foreground = 0.7;
  small.background = 0.3;
  small.noise_sigma = 0.05;
  small.seed = 9;
  emit("disk_small", small);

  SynthSpec noisy;
  noisy.kind = SynthKind::kDisk;
  noisy.noise_sigma = 0.06;
  noisy.seed = 11;
  emit("disk_noisy", noisy);
}

int run_bench(BenchArgs a) {
  if (a.corpus.empty()) throw SpecError("bench: --corpus is required");
  if (a.make_default_corpus) write_default_corpus(a.corpus);

  std::vector<fs::path> images;
  if (fs::is_directory(a.corpus)) {
    for (const auto& entry : fs::directory_iterator(a.corpus)) {
      if (!entry.is_regular_file()) continue;
      const std::string name = entry.path().filename().string();
      const std::string ext = entry.path().extension().string();
      if (ext != ".pgm" && ext != ".ppm") continue;
      if (name.size() > 10 && name.substr(name.size() - 10) == ".truth.pgm") continue;
      images.push_back(entry.path());
    }
  }
  std::sort(images.begin(), images.end());
  if (images.empty())
    throw IoError("bench: corpus directory '" + a.corpus + "' holds no PGM/PPM images");

  std::vector<std::string> algos = split(a.algos, ',');
  for (auto& s : algos)
    if (s.empty()) throw SpecError("bench: --algos has an empty entry");
  std::sort(algos.begin(), algos.end());

  std::string csv = "image,algo,iterations,wall_ms,dice,converged\n";
  for (const auto& img_path : images) {
    const RasterImage raster = load_pnm(img_path);
    const ScalarField2D image =
        rescale_max_dim(to_grayscale_normalized(raster), kDefaultMaxDim);
    const int w = image.width(), h = image.height();

    std::vector<uint8_t> truth;
    fs::path truth_path = img_path;
    truth_path.replace_extension("");
    truth_path += ".truth.pgm";
    if (fs::exists(truth_path)) {
      const RasterImage t = load_pnm(truth_path);
      if (t.width == w && t.height == h && t.channels == 1) {
        truth.resize(static_cast<size_t>(w) * h);
        for (size_t i = 0; i < truth.size(); ++i) truth[i] = t.samples[i] > 0 ? 1 : 0;
      }
    }

    for (const auto& algo_text : algos) {
      AlgorithmParams params = a.model;
      params.algo = parse_algo(algo_text);
      if (params.algo == Algo::kLocalized && params.localized.radius <= 0.0)
        params.localized.radius = default_ball_radius(w, h);
      const LevelSetField phi0 = init_levelset({default_init_shape(w, h)}, w, h,
                                               default_init_mode(params.algo));
      EvolveOptions opts;
      opts.max_iters = default_max_iters(params.algo);
      auto model = make_model(params);
      const SegmentationResult res = evolve(image, phi0, *model, opts);

      char dice_text[32] = "";
      if (!truth.empty())
        std::snprintf(dice_text, sizeof(dice_text), "%.4f",
                      dice(interior_mask(res.phi_final), truth));
      char row[256];
      std::snprintf(row, sizeof(row), "%s,%s,%d,%.3f,%s,%d\n",
                    img_path.stem().string().c_str(), algo_name(params.algo),
                    res.iterations_run, res.wall_ms, dice_text, res.converged ? 1 : 0);
      csv += row;
      std::printf("%s", row);
    }
  }
  if (!a.report.empty()) {
    if (!fs::path(a.report).parent_path().empty())
      fs::create_directories(fs::path(a.report).parent_path());
    atomic_write_file(a.report, csv);
  }
  return 0;
}

void add_model_flags(CLI::App* cmd, AlgorithmParams& p) {
  cmd->add_option("--ef-dt", p.edgeflow.dt, "edgeflow: time step (<= 0.25)");
  cmd->add_option("--ef-sigma", p.edgeflow.sigma, "edgeflow: edge map presmoothing");
  cmd->add_option("--cv-lambda-len", p.chanvese.lambda_len, "chanvese: length weight");
  cmd->add_option("--cv-eps", p.chanvese.eps.px, "chanvese: Heaviside band half-width");
  cmd->add_option("--cv-dt", p.chanvese.dt, "chanvese: time step");
  cmd->add_option("--cv-reinit-every", p.chanvese.reinit_every,
                  "chanvese: redistance cadence (0 = off)");
  cmd->add_option("--cv-reinit-steps", p.chanvese.reinit_steps,
                  "chanvese: redistance sweeps per cadence");
  cmd->add_option("--cv-reinit-dtau", p.chanvese.reinit_dtau,
                  "chanvese: redistance pseudo time step");
  cmd->add_option("--drlse-mu", p.drlse.mu, "drlse: distance regularization weight");
  cmd->add_option("--drlse-lambda-len", p.drlse.lambda_len, "drlse: length weight");
  cmd->add_option("--drlse-alpha", p.drlse.alpha,
                  "drlse: area weight, positive shrinks the interior");
  cmd->add_option("--drlse-eps", p.drlse.eps.px, "drlse: Heaviside band half-width");
  cmd->add_option("--drlse-dt", p.drlse.dt, "drlse: time step (mu * dt < 0.25)");
  cmd->add_option("--drlse-sigma", p.drlse.sigma, "drlse: edge map presmoothing");
  cmd->add_option("--rsf-sigma-k", p.rsf.sigma_k, "rsf: fitting kernel scale");
  cmd->add_option("--rsf-lambda1", p.rsf.lambda1, "rsf: interior fitting weight");
  cmd->add_option("--rsf-lambda2", p.rsf.lambda2, "rsf: exterior fitting weight");
  cmd->add_option("--rsf-nu", p.rsf.nu, "rsf: length weight");
  cmd->add_option("--rsf-mu-reg", p.rsf.mu_reg,
                  "rsf: distance regularization (mu_reg * dt < 0.25)");
  cmd->add_option("--rsf-eps", p.rsf.eps.px, "rsf: Heaviside band half-width");
  cmd->add_option("--rsf-dt", p.rsf.dt, "rsf: time step");
  cmd->add_option("--loc-radius", p.localized.radius,
                  "localized: ball radius, <= 0 picks the grid default");
  cmd->add_option("--loc-lambda-len", p.localized.lambda_len,
                  "localized: curvature weight");
  cmd->add_option("--loc-eps", p.localized.eps.px, "localized: band half-width");
  cmd->add_option("--loc-cfl", p.localized.cfl, "localized: step normalization");
  cmd->add_option("--loc-reinit-every", p.localized.reinit_every,
                  "localized: redistance cadence (0 = off)");
  cmd->add_option("--loc-reinit-steps", p.localized.reinit_steps,
                  "localized: redistance sweeps per cadence");
  cmd->add_option("--loc-reinit-dtau", p.localized.reinit_dtau,
                  "localized: redistance pseudo time step");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level set segmentation toolkit"};
  app.require_subcommand(1);

  SegArgs seg;
  CLI::App* seg_cmd =
      app.add_subcommand("segment", "segment one image and export the contours");
  seg_cmd->add_option("--algo", seg.algo_text,
                      "edgeflow | chanvese | drlse | rsf | localized");
  seg_cmd->add_option("--input", seg.input, "input PGM/PPM image");
  seg_cmd->add_option("--init", seg.init_texts,
                      "seed shape circle:cx,cy,r or rect:x0,y0,x1,y1; repeatable, "
                      "several shapes start the contour as their union");
  seg_cmd->add_option("--init-mode", seg.init_mode_text,
                      "sdf | binary_step (default depends on the algorithm)");
  seg_cmd->add_option("--iters", seg.iters, "iteration budget (default per algorithm)");
  auto* check_opt =
      seg_cmd->add_option("--check-every", seg.check_every,
                          "energy/convergence sampling cadence (default 10)");
  seg_cmd->add_option("--patience", seg.patience,
                      "stable checks required to declare convergence");
  seg_cmd->add_flag("--converge,!--no-converge", seg.converge,
                    "stop early once the interior stops changing (default on)");
  seg_cmd->add_option("--min-contour-len", seg.min_contour_len,
                      "drop extracted contours shorter than this");
  seg_cmd->add_option("--max-dim", seg.max_dim,
                      "downscale so the longer image side is at most this");
  seg_cmd->add_option("--out-prefix", seg.out_prefix,
                      "output prefix for .overlay.ppm/.contours.csv/.contours.svg/"
                      ".manifest.json");
  seg_cmd->add_option("--from-manifest", seg.from_manifest,
                      "re-run the exact configuration recorded in a manifest");
  add_model_flags(seg_cmd, seg.model);

  SynthArgs syn;
  CLI::App* syn_cmd = app.add_subcommand("synth", "generate a synthetic test image");
  syn_cmd->add_option("--kind", syn.kind, "disk | tworegion | ramp | checker");
  syn_cmd->add_option("--size", syn.size, "WxH, at least 8x8");
  syn_cmd->add_option("--fg", syn.spec.foreground, "foreground intensity in [0,1]");
  syn_cmd->add_option("--bg", syn.spec.background, "background intensity in [0,1]");
  syn_cmd->add_option("--noise", syn.spec.noise_sigma, "additive Gaussian noise sigma");
  syn_cmd->add_option("--seed", syn.spec.seed, "noise seed");
  syn_cmd->add_option("--center", syn.center, "disk/ramp center cx,cy");
  syn_cmd->add_option("--radius", syn.spec.radius, "disk/ramp radius in pixels");
  syn_cmd->add_option("--split", syn.spec.split, "tworegion: first foreground column");
  syn_cmd->add_option("--slope", syn.spec.slope, "ramp: illumination gain across width");
  syn_cmd->add_option("--cell", syn.spec.cell, "checker: cell size in pixels");
  syn_cmd->add_option("--out", syn.out, "output PGM path");
  syn_cmd->add_option("--truth", syn.truth, "also write the foreground mask here");

  BenchArgs ben;
  CLI::App* ben_cmd =
      app.add_subcommand("bench", "run every algorithm over an image corpus");
  ben_cmd->add_option("--corpus", ben.corpus,
                      "directory of PGM/PPM images, optional .truth.pgm siblings");
  ben_cmd->add_option("--algos", ben.algos, "comma-separated algorithm list");
  ben_cmd->add_option("--report", ben.report, "write the CSV report here");
  ben_cmd->add_flag("--make-default-corpus", ben.make_default_corpus,
                    "populate --corpus with the bundled synthetic scenes first");
  add_model_flags(ben_cmd, ben.model);

  int rc = 0;
  seg_cmd->callback([&] {
    seg.check_every_explicit = check_opt->count() > 0;
    rc = run_segment(seg);
  });
  syn_cmd->callback([&] { rc = run_synth(syn); });
  ben_cmd->callback([&] { rc = run_bench(ben); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const levelseg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return rc;
}
