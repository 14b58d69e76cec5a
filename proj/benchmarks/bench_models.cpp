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

// Microbenchmarks for the grid stencils and one evolution step of each
// model, all on the 128x128 noisy-disk scene the tests use.

#include <benchmark/benchmark.h>

#include "levelseg/engine.hpp"

using namespace levelseg;

namespace {

const ScalarField2D& scene() {
  static const ScalarField2D image = [] {
    SynthSpec spec;
    spec.noise_sigma = 0.05;
    spec.seed = 42;
    return synth(spec);
  }();
  return image;
}

const LevelSetField& seed_sdf() {
  static const LevelSetField phi =
      init_levelset({ShapeSpec::circle(64, 64, 40)}, 128, 128, InitMode::kSdf);
  return phi;
}

void BM_GradCentral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(grad_central(seed_sdf()));
}
BENCHMARK(BM_GradCentral);

void BM_Curvature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(curvature(seed_sdf()));
}
BENCHMARK(BM_Curvature);

void BM_GaussianSmooth(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_smooth(scene(), 1.5));
}
BENCHMARK(BM_GaussianSmooth);

void BM_SussmanSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sussman_reinit(seed_sdf(), 1, 0.3));
}
BENCHMARK(BM_SussmanSweep);

void BM_ExtractZeroSet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(extract_zero_set(seed_sdf()));
}
BENCHMARK(BM_ExtractZeroSet);

void BM_EdgeIndicator(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(edge_indicator(scene(), 1.5));
}
BENCHMARK(BM_EdgeIndicator);

// one step of each model, image transforms prepared outside the loop

void BM_StepEdgeFlow(benchmark::State& state) {
  const EdgeMap g = edge_indicator(scene(), 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(edgeflow_step(seed_sdf(), g, 0.25));
}
BENCHMARK(BM_StepEdgeFlow);

void BM_StepChanVese(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cv_step(scene(), seed_sdf(), ChanVeseParams{}));
}
BENCHMARK(BM_StepChanVese);

void BM_StepDrlse(benchmark::State& state) {
  const DrlseParams params;
  const EdgeMap g = edge_indicator(scene(), params.sigma);
  const LevelSetField phi =
      init_levelset({ShapeSpec::circle(64, 64, 40)}, 128, 128, InitMode::kBinaryStep);
  for (auto _ : state) benchmark::DoNotOptimize(drlse_step(phi, g, params));
}
BENCHMARK(BM_StepDrlse);

void BM_StepRsf(benchmark::State& state) {
  RsfModel model{RsfParams{}};
  model.prepare(scene());
  for (auto _ : state) benchmark::DoNotOptimize(model.step(scene(), seed_sdf()));
}
BENCHMARK(BM_StepRsf);

void BM_StepLocalized(benchmark::State& state) {
  LocalizedParams params;
  params.radius = default_ball_radius(128, 128);
  for (auto _ : state)
    benchmark::DoNotOptimize(localized_step(scene(), seed_sdf(), params));
}
BENCHMARK(BM_StepLocalized);

}  // namespace

BENCHMARK_MAIN();
