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

#include "levelseg/edge_base.hpp"

#include <cmath>

#include "levelseg/errors.hpp"

namespace levelseg {

EdgeMap edge_indicator(const ScalarField2D& image, double sigma, double intensity_scale) {
  if (!(sigma > 0.0)) throw SpecError("edge_indicator: sigma must be positive");
  if (!(intensity_scale > 0.0)) throw SpecError("edge_indicator: intensity scale must be positive");
  const ScalarField2D smoothed = gaussian_smooth(image, sigma);
  const VectorField2D g = grad_central(smoothed);
  ScalarField2D out(image.width(), image.height());
  const double s2 = intensity_scale * intensity_scale;
  for (size_t i = 0; i < out.size(); ++i) {
    const double m2 = s2 * (g.x[i] * g.x[i] + g.y[i] * g.y[i]);
    out[i] = 1.0 / (1.0 + m2);
  }
  return EdgeMap{std::move(out)};
}

LevelSetField edgeflow_step(const LevelSetField& phi, const EdgeMap& g, double dt) {
  if (!(dt > 0.0) || dt > 0.25) throw SpecError("edgeflow_step: need 0 < dt <= 0.25");
  if (!g.g.same_shape(phi)) throw SpecError("edgeflow_step: edge map does not match phi");
  const ScalarField2D k = curvature(phi);
  const ScalarField2D m = grad_magnitude(grad_central(phi));
  LevelSetField out(phi.width(), phi.height());
  for (size_t i = 0; i < phi.size(); ++i)
    out[i] = phi[i] + dt * g.g[i] * k[i] * m[i];
  return out;
}

void EdgeFlowModel::prepare(const ScalarField2D& image) {
  edges_ = edge_indicator(image, params_.sigma);
}

LevelSetField EdgeFlowModel::step(const ScalarField2D& image, const LevelSetField& phi) {
  (void)image;
  return edgeflow_step(phi, edges_, params_.dt);
}

double EdgeFlowModel::energy(const ScalarField2D& image, const LevelSetField& phi) const {
  (void)image;
  const ScalarField2D m = grad_magnitude(grad_central(phi));
  const ScalarField2D d = dirac(phi, Epsilon{});
  double e = 0.0;
  for (size_t i = 0; i < phi.size(); ++i) e += edges_.g[i] * d[i] * m[i];
  return e;
}

}  // namespace levelseg
