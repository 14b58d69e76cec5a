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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "levelseg/drlse.hpp"
#include "levelseg/engine.hpp"
#include "levelseg/init_contour.hpp"
#include "levelseg/raster.hpp"

using namespace levelseg;

namespace {

ScalarField2D smooth_random(int w, int h, uint64_t seed, double sigma, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ScalarField2D f(w, h);
  for (size_t i = 0; i < f.size(); ++i) f[i] = u(rng);
  f = gaussian_smooth(f, sigma);
  for (size_t i = 0; i < f.size(); ++i) f[i] *= scale;
  return f;
}

double band_defect(const LevelSetField& phi) {
  const ScalarField2D m = grad_magnitude(grad_central(phi));
  double sum = 0.0;
  int n = 0;
  for (size_t i = 0; i < phi.size(); ++i)
    if (std::fabs(phi[i]) < 5.0) {
      sum += std::fabs(m[i] - 1.0);
      ++n;
    }
  return n ? sum / n : 0.0;
}

}  // namespace

TEST_SUITE("drlse") {

TEST_CASE("single-well potential values") {
  CHECK(potential_p(1.0) == 0.0);
  CHECK(potential_p(0.0) == 0.5);
  CHECK(potential_p(2.0) == 0.5);
  CHECK(potential_p(3.0) == 2.0);
}

TEST_CASE("the model never asks for redistancing") {
  DrlseModel model{DrlseParams{}};
  CHECK(model.reinit_schedule().every == 0);
  CHECK(model.reinit_schedule().steps == 0);
}

TEST_CASE("reference run: binary seed self-regularizes into a usable contour") {
  SynthSpec spec;  // the 128x128 benchmark scene
  spec.noise_sigma = 0.05;
  spec.seed = 42;
  const ScalarField2D image = synth(spec);
  const RasterImage truth = truth_mask(spec);
  const LevelSetField phi0 =
      init_levelset({ShapeSpec::circle(64, 64, 40)}, 128, 128, InitMode::kBinaryStep);

  DrlseModel model{DrlseParams{}};
  EvolveOptions opts;
  opts.max_iters = 1000;
  const SegmentationResult res = evolve(image, phi0, model, opts);

  CHECK(res.converged);
  CHECK(res.iterations_run < 1000);

  std::vector<uint8_t> t(truth.samples.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = truth.samples[i] > 0 ? 1 : 0;
  CHECK(dice(interior_mask(res.phi_final), t) >= 0.95);

  // slope pulled to 1 near the interface without a single redistancing pass
  CHECK(band_defect(res.phi_final) <= 0.3);

  // dt = 5 stays bounded: no blow-up from the backward-diffusion branch.
  // The regularizer keeps extending phi toward a signed distance field, so the
  // settled max legitimately exceeds the +/-2 step height; measured 3.25x here
  // and a 4.10x transient on fixed 1000-iteration runs.
  double m0 = 0.0, m1 = 0.0;
  for (size_t i = 0; i < phi0.size(); ++i) m0 = std::max(m0, std::fabs(phi0[i]));
  for (size_t i = 0; i < res.phi_final.size(); ++i)
    m1 = std::max(m1, std::fabs(res.phi_final[i]));
  CHECK(m1 <= 4.0 * m0);

  // the recorded energies descend at the trace cadence
  double lo = res.energy_trace.front().second, hi = lo, worst = 0.0;
  for (size_t i = 1; i < res.energy_trace.size(); ++i) {
    const double inc = res.energy_trace[i].second - res.energy_trace[i - 1].second;
    worst = std::max(worst, inc);
    lo = std::min(lo, res.energy_trace[i].second);
    hi = std::max(hi, res.energy_trace[i].second);
  }
  CHECK(worst <= 1e-3 * (hi - lo));
}

TEST_CASE("distance-regularizer update matches the energy gradient") {
  // Away from the zero set the delta-gated length and area forces vanish and
  // the update reduces to the mu term, which is the exact discrete gradient
  // of the potential sum (divergence is the adjoint of the central gradient
  // away from the clamped frame). An offset keeps the whole field out of the
  // delta band without making it less random.
  const ScalarField2D image = smooth_random(16, 16, 41, 1.0, 0.5);
  const DrlseParams params;
  const EdgeMap g = edge_indicator(image, params.sigma);
  LevelSetField phi = smooth_random(16, 16, 42, 1.5, 1.0);
  double peak = 0.0;
  for (size_t i = 0; i < phi.size(); ++i) peak = std::max(peak, std::fabs(phi[i]));
  for (size_t i = 0; i < phi.size(); ++i) phi[i] = phi[i] * 4.0 / peak + 8.0;
  const LevelSetField next = drlse_step(phi, g, params);
  const ScalarField2D slope = grad_magnitude(grad_central(phi));

  std::vector<size_t> candidates;
  for (int y = 2; y < 14; ++y)
    for (int x = 2; x < 14; ++x) {
      const size_t i = static_cast<size_t>(y) * 16 + x;
      if (slope[i] > 0.2) candidates.push_back(i);
    }
  REQUIRE(candidates.size() >= 20);
  std::mt19937_64 rng(6);
  std::shuffle(candidates.begin(), candidates.end(), rng);

  const double h = 1e-4;
  for (size_t k = 0; k < 20; ++k) {
    const size_t i = candidates[k];
    CHECK(std::fabs(phi[i]) > params.eps.px);  // clear of the band by construction
    const double step_rate = (next[i] - phi[i]) / params.dt;
    const double save = phi[i];
    phi[i] = save + h;
    const double ep = drlse_energy(phi, g, params);
    phi[i] = save - h;
    const double em = drlse_energy(phi, g, params);
    phi[i] = save;
    const double fd = (ep - em) / (2 * h);
    const double mismatch =
        std::fabs(step_rate + fd) / std::max(std::fabs(fd), std::fabs(step_rate));
    CHECK(mismatch <= 5e-2);  // measured 4.8e-7
  }
}

TEST_CASE("area-term update matches the energy gradient pixel by pixel") {
  // the weighted area force is pointwise, so it is exact on any field,
  // including inside the band
  const ScalarField2D image = smooth_random(16, 16, 41, 1.0, 0.5);
  DrlseParams params;
  params.mu = 0.0;
  params.lambda_len = 0.0;
  const EdgeMap g = edge_indicator(image, params.sigma);
  LevelSetField phi = smooth_random(16, 16, 43, 2.0, 2.0);
  const LevelSetField next = drlse_step(phi, g, params);
  double max_step = 0.0;
  for (size_t i = 0; i < phi.size(); ++i)
    max_step = std::max(max_step, std::fabs(next[i] - phi[i]));
  REQUIRE(max_step > 0.0);
  const double h = 1e-4;
  int tested = 0;
  for (size_t i = 0; i < phi.size(); ++i) {
    if (std::fabs(next[i] - phi[i]) < 0.05 * max_step) continue;
    ++tested;
    const double step_rate = (next[i] - phi[i]) / params.dt;
    const double save = phi[i];
    phi[i] = save + h;
    const double ep = drlse_energy(phi, g, params);
    phi[i] = save - h;
    const double em = drlse_energy(phi, g, params);
    phi[i] = save;
    const double fd = (ep - em) / (2 * h);
    CHECK(std::fabs(step_rate + fd) / std::max(std::fabs(fd), std::fabs(step_rate)) <= 1e-6);
  }
  CHECK(tested >= 10);
}

TEST_CASE("model step matches the free function with cached edges") {
  const ScalarField2D image = smooth_random(20, 20, 51, 1.5, 0.5);
  const LevelSetField phi = smooth_random(20, 20, 52, 2.0, 4.0);
  const DrlseParams params;
  DrlseModel model{params};
  model.prepare(image);
  const LevelSetField a = model.step(image, phi);
  const LevelSetField b = drlse_step(phi, edge_indicator(image, params.sigma), params);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(model.energy(image, phi) ==
        drlse_energy(phi, edge_indicator(image, params.sigma), params));
}

TEST_CASE("regularization energy vanishes only at unit slope") {
  ScalarField2D unit(10, 10);
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x) unit.at(x, y) = x;
  // interior columns have exact unit slope; the frame's replicate ghosts do not
  double interior_sum = 0.0;
  const ScalarField2D m = grad_magnitude(grad_central(unit));
  for (int y = 1; y < 9; ++y)
    for (int x = 1; x < 9; ++x) interior_sum += potential_p(m.at(x, y));
  CHECK(interior_sum == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(reg_energy(unit) > 0.0);  // border rows pay the penalty
  CHECK(reg_energy(ScalarField2D(10, 10, 3.0)) == doctest::Approx(0.5 * 100));
}

}  // TEST_SUITE
