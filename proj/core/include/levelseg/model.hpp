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

#ifndef LEVELSEG_MODEL_HPP_
#define LEVELSEG_MODEL_HPP_

#include <string_view>

#include "levelseg/field.hpp"

namespace levelseg {

// Periodic signed-distance restoration. every == 0 disables it; the
// curvature-only and intrinsically regularized flows run without any.
struct ReinitSchedule {
  int every = 0;
  int steps = 0;
  double dtau = 0.3;
};

// One evolution model as seen by the driver loop: a step rule, the energy
// it descends, and an optional reinitialization cadence.
class EvolutionModel {
 public:
  virtual ~EvolutionModel() = default;

  virtual std::string_view name() const = 0;

  // Called once before the loop; models cache image-derived quantities
  // (edge maps, kernel transforms) here.
  virtual void prepare(const ScalarField2D& image) { (void)image; }

  virtual LevelSetField step(const ScalarField2D& image, const LevelSetField& phi) = 0;

  virtual double energy(const ScalarField2D& image, const LevelSetField& phi) const = 0;

  virtual ReinitSchedule reinit_schedule() const { return {}; }
};

}  // namespace levelseg

#endif  // LEVELSEG_MODEL_HPP_
