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

#ifndef LEVELSEG_CHAN_VESE_HPP_
#define LEVELSEG_CHAN_VESE_HPP_

#include "levelseg/field.hpp"
#include "levelseg/model.hpp"

namespace levelseg {

struct ChanVeseParams {
  double lambda_len = 0.1;  // weight of the contour-length penalty
  Epsilon eps{1.5};
  double dt = 0.5;
  int reinit_every = 25;
  int reinit_steps = 5;
  double reinit_dtau = 0.3;
};

struct RegionMeans {
  double c1;  // interior {phi < 0}
  double c2;  // exterior
};

// Heaviside-weighted means of the two phases. A region whose weight mass
// falls below 1e-9 gets the global image mean instead, which zeroes the
// data force and keeps the update finite.
RegionMeans region_means(const ScalarField2D& image, const LevelSetField& phi, Epsilon eps);

// sum (I-c1)^2 H_in + sum (I-c2)^2 (1-H_in) + lambda * sum dirac(phi) |grad phi|
double cv_energy(const ScalarField2D& image, const LevelSetField& phi, const RegionMeans& means,
                 double lambda_len, Epsilon eps);

// One descent step with the means refreshed from the current phi:
//   phi += dt * dirac(phi) * (lambda * div(grad phi / |grad phi|) + (I-c1)^2 - (I-c2)^2)
// A pixel that fits the exterior better is pushed up, out of the interior.
LevelSetField cv_step(const ScalarField2D& image, const LevelSetField& phi,
                      const ChanVeseParams& params);

class ChanVeseModel : public EvolutionModel {
 public:
  explicit ChanVeseModel(ChanVeseParams params) : params_(params) {}

  std::string_view name() const override { return "chanvese"; }
  LevelSetField step(const ScalarField2D& image, const LevelSetField& phi) override;
  double energy(const ScalarField2D& image, const LevelSetField& phi) const override;
  ReinitSchedule reinit_schedule() const override {
    return {params_.reinit_every, params_.reinit_steps, params_.reinit_dtau};
  }

 private:
  ChanVeseParams params_;
};

}  // namespace levelseg

#endif  // LEVELSEG_CHAN_VESE_HPP_
