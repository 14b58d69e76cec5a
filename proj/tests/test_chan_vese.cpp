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
#include "levelseg/chan_vese.hpp"
#include "levelseg/engine.hpp"
#include "levelseg/field.hpp"
#include "levelseg/init_contour.hpp"
#include "levelseg/raster.hpp"

using namespace levelseg;

namespace {

constexpr double kFg = 0.8, kBg = 0.2;

ScalarField2D smooth_random(int w, int h, uint64_t seed, double sigma, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ScalarField2D f(w, h);
  for (size_t i = 0; i < f.size(); ++i) f[i] = u(rng);
  f = gaussian_smooth(f, sigma);
  for (size_t i = 0; i < f.size(); ++i) f[i] *= scale;
  return f;
}

double dice_against_truth(const LevelSetField& phi, const RasterImage& truth) {
  std::vector<uint8_t> t(truth.samples.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = truth.samples[i] > 0 ? 1 : 0;
  return dice(interior_mask(phi), t);
}

}  // namespace

TEST_SUITE("chanvese") {

TEST_CASE("region means are exact when the band is empty") {
  SynthSpec spec;
  spec.width = 64;
  spec.height = 64;
  spec.radius = 16.5;  // keeps every lattice point strictly off the boundary
  const ScalarField2D image = synth(spec);
  const LevelSetField phi =
      init_levelset({ShapeSpec::circle(32, 32, 16.5)}, 64, 64, InitMode::kBinaryStep);
  const RegionMeans m = region_means(image, phi, Epsilon{1.5});
  CHECK(m.c1 == doctest::Approx(kFg).epsilon(1e-12));
  CHECK(m.c2 == doctest::Approx(kBg).epsilon(1e-12));
}

TEST_CASE("an empty phase falls back to the global mean") {
  const ScalarField2D image = smooth_random(16, 16, 7, 1.0, 1.0);
  const LevelSetField phi(16, 16, 2.0);  // no interior anywhere
  const RegionMeans m = region_means(image, phi, Epsilon{1.5});
  double global = 0.0;
  for (size_t i = 0; i < image.size(); ++i) global += image[i];
  global /= image.size();
  CHECK(m.c1 == doctest::Approx(global).epsilon(1e-12));
  CHECK(m.c2 == doctest::Approx(global).epsilon(1e-12));

  // and with no band pixels the update is identically zero
  const ChanVeseParams params;
  const LevelSetField next = cv_step(image, phi, params);
  for (size_t i = 0; i < phi.size(); ++i) CHECK(next[i] == phi[i]);
}

TEST_CASE("means stay inside the intensity range") {
  const ScalarField2D image = smooth_random(24, 24, 9, 1.0, 0.5);
  const LevelSetField phi = smooth_random(24, 24, 10, 2.0, 6.0);
  const RegionMeans m = region_means(image, phi, Epsilon{1.5});
  const auto [lo, hi] = std::minmax_element(image.data().begin(), image.data().end());
  CHECK(m.c1 >= *lo);
  CHECK(m.c1 <= *hi);
  CHECK(m.c2 >= *lo);
  CHECK(m.c2 <= *hi);
}

TEST_CASE("descent improves a loose seed on the clean disk") {
  SynthSpec spec;
  spec.width = 64;
  spec.height = 64;
  spec.radius = 16.5;
  const ScalarField2D image = synth(spec);
  const RasterImage truth = truth_mask(spec);
  LevelSetField phi = init_levelset({ShapeSpec::circle(32, 32, 22)}, 64, 64, InitMode::kSdf);
  const double d0 = dice_against_truth(phi, truth);
  const ChanVeseParams params;
  // The delta band shuts off as phi steepens, so the bare flow stalls around
  // dice 0.79; the shipped redistancing cadence keeps the front moving.
  for (int i = 1; i <= 250; ++i) {
    phi = cv_step(image, phi, params);
    if (i % params.reinit_every == 0) phi = sussman_reinit(phi, params.reinit_steps, params.reinit_dtau);
  }
  const double d1 = dice_against_truth(phi, truth);
  CHECK(d1 > d0);
  CHECK(d1 >= 0.98);
}

TEST_CASE("energy never rises along the plain flow on the reference disk") {
  SynthSpec spec;  // the 128x128 benchmark scene
  spec.noise_sigma = 0.05;
  spec.seed = 42;
  const ScalarField2D image = synth(spec);
  LevelSetField phi = init_levelset({ShapeSpec::circle(64, 64, 40)}, 128, 128, InitMode::kSdf);
  const ChanVeseParams params;
  double prev = cv_energy(image, phi, region_means(image, phi, params.eps),
                          params.lambda_len, params.eps);
  double lo = prev, hi = prev, worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    phi = cv_step(image, phi, params);
    const double e = cv_energy(image, phi, region_means(image, phi, params.eps),
                               params.lambda_len, params.eps);
    worst = std::max(worst, e - prev);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    prev = e;
  }
  CHECK(worst <= 1e-3 * (hi - lo));
}

TEST_CASE("update direction follows the energy gradient downhill") {
  // The curvature force is the continuum first variation of the length term,
  // so it matches the discrete energy gradient only where the delta band is
  // resolved: keep the slopes gentle and compare the sampled pixels together
  // (relative error of the 20-component update vector), not one at a time.
  const ScalarField2D image = smooth_random(16, 16, 21, 1.0, 0.5);
  LevelSetField phi = smooth_random(16, 16, 22, 2.5, 1.0);
  double peak = 0.0;
  for (size_t i = 0; i < phi.size(); ++i) peak = std::max(peak, std::fabs(phi[i]));
  for (size_t i = 0; i < phi.size(); ++i) phi[i] *= 0.75 / peak;
  const ChanVeseParams params;
  const LevelSetField next = cv_step(image, phi, params);

  auto energy_of = [&](const LevelSetField& p) {
    return cv_energy(image, p, region_means(image, p, params.eps), params.lambda_len,
                     params.eps);
  };

  // clamped stencils break the gradient/divergence pairing in the outer two
  // rows, so sample away from the frame
  std::vector<size_t> candidates;
  double max_step = 0.0;
  for (size_t i = 0; i < phi.size(); ++i)
    max_step = std::max(max_step, std::fabs(next[i] - phi[i]));
  REQUIRE(max_step > 0.0);
  for (int y = 2; y < 14; ++y)
    for (int x = 2; x < 14; ++x) {
      const size_t i = static_cast<size_t>(y) * 16 + x;
      if (std::fabs(next[i] - phi[i]) >= 0.05 * max_step) candidates.push_back(i);
    }
  REQUIRE(candidates.size() >= 20);
  std::mt19937_64 rng(5);
  std::shuffle(candidates.begin(), candidates.end(), rng);

  const double h = 1e-4;
  double nr = 0.0, nf = 0.0, nd = 0.0, inner = 0.0;
  for (size_t k = 0; k < 20; ++k) {
    const size_t i = candidates[k];
    const double step_rate = (next[i] - phi[i]) / params.dt;
    const double save = phi[i];
    phi[i] = save + h;
    const double ep = energy_of(phi);
    phi[i] = save - h;
    const double em = energy_of(phi);
    phi[i] = save;
    const double fd = (ep - em) / (2 * h);
    nr += step_rate * step_rate;
    nf += fd * fd;
    nd += (step_rate + fd) * (step_rate + fd);
    inner += step_rate * -fd;
  }
  const double mismatch = std::sqrt(nd) / std::max(std::sqrt(nr), std::sqrt(nf));
  CHECK(mismatch <= 5e-2);  // measured 5.2e-3
  CHECK(inner > 0.0);
}

TEST_CASE("fitting-term update matches the energy gradient pixel by pixel") {
  // with the length term off the update is the exact discrete gradient,
  // whatever the field looks like
  const ScalarField2D image = smooth_random(16, 16, 21, 1.0, 0.5);
  LevelSetField phi = smooth_random(16, 16, 23, 2.0, 8.0);
  ChanVeseParams params;
  params.lambda_len = 0.0;
  const LevelSetField next = cv_step(image, phi, params);
  auto energy_of = [&](const LevelSetField& p) {
    return cv_energy(image, p, region_means(image, p, params.eps), params.lambda_len,
                     params.eps);
  };
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
    const double ep = energy_of(phi);
    phi[i] = save - h;
    const double em = energy_of(phi);
    phi[i] = save;
    const double fd = (ep - em) / (2 * h);
    // measured worst 1.4e-6; the quotient amplifies roundoff where fd is tiny
    CHECK(std::fabs(step_rate + fd) / std::max(std::fabs(fd), std::fabs(step_rate)) <= 1e-5);
  }
  CHECK(tested >= 20);
}

TEST_CASE("one seed between two bright disks captures both") {
  const int n = 128;
  ScalarField2D image(n, n, kBg);
  std::vector<uint8_t> disk_a(n * n, 0), disk_b(n * n, 0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (std::hypot(x - 40.0, y - 64.0) <= 14.0) {
        image.at(x, y) = kFg;
        disk_a[y * n + x] = 1;
      }
      if (std::hypot(x - 88.0, y - 64.0) <= 14.0) {
        image.at(x, y) = kFg;
        disk_b[y * n + x] = 1;
      }
    }
  // the seed overlaps both disks a little so the region statistics couple to
  // them from the start; a fixed budget sidesteps the mask-stability stop,
  // which fires on the slow early creep
  const LevelSetField phi0 =
      init_levelset({ShapeSpec::circle(64, 64, 14)}, n, n, InitMode::kSdf);
  ChanVeseModel model{ChanVeseParams{}};
  EvolveOptions opts;
  opts.max_iters = 1500;
  opts.enable_convergence = false;
  const SegmentationResult res = evolve(image, phi0, model, opts);

  auto restricted_dice = [&](const std::vector<uint8_t>& disk) {
    // compare only inside the disk's bounding box
    int x0 = n, x1 = 0, y0 = n, y1 = 0;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x)
        if (disk[y * n + x]) {
          x0 = std::min(x0, x);
          x1 = std::max(x1, x);
          y0 = std::min(y0, y);
          y1 = std::max(y1, y);
        }
    size_t overlap = 0, a = 0, b = 0;
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) {
        const bool in = res.phi_final.at(x, y) < 0;
        const bool t = disk[y * n + x] != 0;
        overlap += (in && t);
        a += in;
        b += t;
      }
    return a + b ? 2.0 * overlap / double(a + b) : 1.0;
  };
  CHECK(restricted_dice(disk_a) >= 0.9);
  CHECK(restricted_dice(disk_b) >= 0.9);
}

TEST_CASE("adding a constant to the image leaves the update unchanged") {
  SynthSpec spec;
  spec.width = 64;
  spec.height = 64;
  spec.noise_sigma = 0.05;
  spec.seed = 3;
  const ScalarField2D image = synth(spec);
  ScalarField2D shifted = image;
  for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += 0.13;
  const LevelSetField phi =
      init_levelset({ShapeSpec::circle(32, 32, 20)}, 64, 64, InitMode::kSdf);
  const ChanVeseParams params;
  const LevelSetField a = cv_step(image, phi, params);
  const LevelSetField b = cv_step(shifted, phi, params);
  for (size_t i = 0; i < a.size(); ++i) CHECK(std::fabs(a[i] - b[i]) <= 1e-9);
}

TEST_CASE("model wraps the step, energy, and redistancing cadence") {
  const ChanVeseParams params;
  ChanVeseModel model{params};
  CHECK(model.name() == "chanvese");
  const ReinitSchedule r = model.reinit_schedule();
  CHECK(r.every == 25);
  CHECK(r.steps == 5);
  CHECK(r.dtau == 0.3);

  const ScalarField2D image = smooth_random(16, 16, 31, 1.0, 0.5);
  const LevelSetField phi = smooth_random(16, 16, 32, 2.0, 5.0);
  const LevelSetField a = model.step(image, phi);
  const LevelSetField b = cv_step(image, phi, params);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(model.energy(image, phi) ==
        cv_energy(image, phi, region_means(image, phi, params.eps), params.lambda_len,
                  params.eps));
}

}  // TEST_SUITE
