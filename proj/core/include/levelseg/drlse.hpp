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

#ifndef LEVELSEG_DRLSE_HPP_
#define LEVELSEG_DRLSE_HPP_

#include "levelseg/edge_base.hpp"
#include "levelseg/field.hpp"
#include "levelseg/model.hpp"

namespace levelseg {

// Distance-regularized edge-based evolution. The distance penalty keeps
// |grad phi| near 1 on its own, so this model never reinitializes; it is
// meant to start from a binary step, not a signed distance function.
struct DrlseParams {
  double mu = 0.04;        // distance regularization; needs mu * dt < 0.25
  double lambda_len = 5.0; // weighted contour length
  double alpha = 1.5;      // weighted area; positive shrinks the interior
  Epsilon eps{1.5};
  double dt = 5.0;
  double sigma = 1.5;      // presmoothing for the edge map
};

// Single-well potential p(s) = 0.5 (s - 1)^2 penalizing deviation of
// |grad phi| from 1.
double potential_p(double s);

// sum p(|grad phi|) over the grid.
double reg_energy(const LevelSetField& phi);

// mu * reg + lambda * sum g dirac(phi) |grad phi| + alpha * sum g H_in(phi)
double drlse_energy(const LevelSetField& phi, const EdgeMap& g, const DrlseParams& params);

// phi += dt * ( mu * (lap phi - div(grad phi / |grad phi|))
//             + lambda * dirac(phi) * div(g grad phi / |grad phi|)
//             + alpha * g * dirac(phi) )
// The first bracket equals div((1 - 1/|grad phi|) grad phi): forward
// diffusion where the slope is too steep, backward where too flat.
LevelSetField drlse_step(const LevelSetField& phi, const EdgeMap& g, const DrlseParams& params);

class DrlseModel : public EvolutionModel {
 public:
  explicit DrlseModel(DrlseParams params);

  std::string_view name() const override { return "drlse"; }
  void prepare(const ScalarField2D& image) override;
  LevelSetField step(const ScalarField2D& image, const LevelSetField& phi) override;
  double energy(const ScalarField2D& image, const LevelSetField& phi) const override;
  // Intentionally no reinitialization: the mu term does that job.

 private:
  DrlseParams params_;
  EdgeMap edges_;
};

}  // namespace levelseg

#endif  // LEVELSEG_DRLSE_HPP_
