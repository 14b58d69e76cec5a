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

#ifndef LEVELSEG_EDGE_BASE_HPP_
#define LEVELSEG_EDGE_BASE_HPP_

#include "levelseg/field.hpp"
#include "levelseg/model.hpp"

namespace levelseg {

// Edge-stopping weights: values in (0, 1], identically 1 on flat images,
// small where the smoothed image has strong gradients.
struct EdgeMap {
  ScalarField2D g;
};

// Image gradients are measured on the conventional 8-bit intensity scale;
// on [0,1]-normalized inputs a raw |grad| of ~0.15 at a sharp step would
// leave 1/(1+|grad|^2) indistinguishable from 1 and the stopping function
// useless, so intensities are multiplied by this factor first.
inline constexpr double kEdgeIntensityScale = 255.0;

// g = 1 / (1 + |grad(G_sigma * f)|^2), with f scaled as above.
EdgeMap edge_indicator(const ScalarField2D& image, double sigma,
                       double intensity_scale = kEdgeIntensityScale);

struct EdgeFlowParams {
  double dt = 0.25;    // explicit curvature flow needs dt <= 0.25
  double sigma = 1.5;  // presmoothing for the edge map
};

// One explicit step of phi += dt * g * curvature(phi) * |grad phi|:
// mean-curvature motion modulated by the edge weights.
LevelSetField edgeflow_step(const LevelSetField& phi, const EdgeMap& g, double dt);

class EdgeFlowModel : public EvolutionModel {
 public:
  explicit EdgeFlowModel(EdgeFlowParams params) : params_(params) {}

  std::string_view name() const override { return "edgeflow"; }
  void prepare(const ScalarField2D& image) override;
  LevelSetField step(const ScalarField2D& image, const LevelSetField& phi) override;
  // Pure geometric motion; reported "energy" is the weighted contour
  // length sum(g * dirac(phi) * |grad phi|) that the flow shortens.
  double energy(const ScalarField2D& image, const LevelSetField& phi) const override;

 private:
  EdgeFlowParams params_;
  EdgeMap edges_;
};

}  // namespace levelseg

#endif  // LEVELSEG_EDGE_BASE_HPP_
