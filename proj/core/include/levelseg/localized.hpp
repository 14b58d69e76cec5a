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

#ifndef LEVELSEG_LOCALIZED_HPP_
#define LEVELSEG_LOCALIZED_HPP_

#include <utility>
#include <vector>

#include "levelseg/field.hpp"
#include "levelseg/model.hpp"

namespace levelseg {

// Localized region competition: every contour point compares the mean
// intensity inside and outside within its own ball window, so disjoint
// parts of the image never talk to each other. Everything happens on the
// narrow band |phi| <= eps; off-band pixels only move under
// reinitialization.
struct LocalizedParams {
  double radius = 0.0;      // ball radius in pixels; <= 0 picks the grid default
  double lambda_len = 0.1;  // curvature smoothing
  Epsilon eps{1.5};
  double cfl = 0.45;        // step normalization: dt = cfl / max |speed|
  int reinit_every = 25;
  int reinit_steps = 5;
  double reinit_dtau = 0.3;
};

// max(5, round(0.1 * min(width, height)))
double default_ball_radius(int width, int height);

// Strict Euclidean ball membership: ||(x1,y1) - (x0,y0)|| < radius.
bool ball_mask_contains(int x0, int y0, int x1, int y1, double radius);

// Integer offsets (dx, dy) with dx^2 + dy^2 < radius^2.
std::vector<std::pair<int, int>> ball_offsets(double radius);

// Local interior/exterior means per band pixel. Off band both fields hold
// 0 and band[] is 0; if a window sees essentially none of one region, that
// mean copies the other one so the data force vanishes there.
struct LocalStats {
  ScalarField2D u_loc;        // local interior mean
  ScalarField2D v_loc;        // local exterior mean
  std::vector<uint8_t> band;  // 1 where |phi| <= eps
};
LocalStats local_stats(const ScalarField2D& image, const LevelSetField& phi,
                       const LocalizedParams& params);

// sum_x dirac(phi(x)) sum_{y in B(x)} [ H_in(phi(y)) (I(y)-u_loc(x))^2
//                                     + (1-H_in(phi(y))) (I(y)-v_loc(x))^2 ]
double localized_energy(const ScalarField2D& image, const LevelSetField& phi,
                        const LocalizedParams& params);

// speed(x) = dirac(phi(x)) * sum_{y in B(x)} dirac(phi(y)) *
//                ((I(y)-u_loc(x))^2 - (I(y)-v_loc(x))^2)
//          + lambda * dirac(phi(x)) * div(grad phi / |grad phi|)(x)
// applied with the normalized step dt = cfl / (max |speed| + 1e-12).
// speed is exactly zero off the band.
LevelSetField localized_step(const ScalarField2D& image, const LevelSetField& phi,
                             const LocalizedParams& params);

class LocalizedModel : public EvolutionModel {
 public:
  explicit LocalizedModel(LocalizedParams params) : params_(params) {}

  std::string_view name() const override { return "localized"; }
  void prepare(const ScalarField2D& image) override;
  LevelSetField step(const ScalarField2D& image, const LevelSetField& phi) override;
  double energy(const ScalarField2D& image, const LevelSetField& phi) const override;
  ReinitSchedule reinit_schedule() const override {
    return {params_.reinit_every, params_.reinit_steps, params_.reinit_dtau};
  }
  const LocalizedParams& resolved_params() const { return params_; }

 private:
  LocalizedParams params_;
};

}  // namespace levelseg

#endif  // LEVELSEG_LOCALIZED_HPP_
