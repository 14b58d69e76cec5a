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

#ifndef LEVELSEG_ENGINE_HPP_
#define LEVELSEG_ENGINE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "levelseg/chan_vese.hpp"
#include "levelseg/contour.hpp"
#include "levelseg/drlse.hpp"
#include "levelseg/edge_base.hpp"
#include "levelseg/field.hpp"
#include "levelseg/init_contour.hpp"
#include "levelseg/localized.hpp"
#include "levelseg/model.hpp"
#include "levelseg/rsf.hpp"

namespace levelseg {

struct EvolveOptions {
  int max_iters = 500;
  int check_every = 10;   // energy sampling and convergence cadence
  int patience = 3;       // consecutive unchanged checks before stopping
  bool enable_convergence = true;
};

struct SegmentationResult {
  LevelSetField phi_final;
  std::vector<Contour> contours;  // unfiltered; callers apply length policy
  int iterations_run = 0;
  double wall_ms = 0.0;           // evolution loop only, excludes contouring
  std::vector<std::pair<int, double>> energy_trace;  // (iteration, energy)
  bool converged = false;
};

// Runs model.prepare then up to max_iters steps. Energy is sampled at
// iteration 0 and after every check_every-th step, before any scheduled
// redistancing of that iteration; the interior sign pattern is compared at
// the same cadence after redistancing, and the run stops once it has held
// still for `patience` consecutive checks. Non-finite values abort with the
// failing iteration in the message.
SegmentationResult evolve(const ScalarField2D& image, const LevelSetField& phi0,
                          EvolutionModel& model, const EvolveOptions& opts);

enum class Algo { kEdgeFlow, kChanVese, kDrlse, kRsf, kLocalized };

Algo parse_algo(const std::string& name);
const char* algo_name(Algo algo);
int default_max_iters(Algo algo);
InitMode default_init_mode(Algo algo);  // band-free start for the distance-regularized flow

// One bag with every model's knobs so callers can materialize defaults,
// tweak a few fields, and build the chosen model from it.
struct AlgorithmParams {
  Algo algo = Algo::kChanVese;
  EdgeFlowParams edgeflow;
  ChanVeseParams chanvese;
  DrlseParams drlse;
  RsfParams rsf;
  LocalizedParams localized;
};

std::unique_ptr<EvolutionModel> make_model(const AlgorithmParams& params);

// 1 where phi < 0.
std::vector<uint8_t> interior_mask(const LevelSetField& phi);

// Dice overlap of two same-sized binary masks; 1.0 when both are empty.
double dice(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b);

}  // namespace levelseg

#endif  // LEVELSEG_ENGINE_HPP_
