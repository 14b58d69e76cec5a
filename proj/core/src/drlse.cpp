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

#include "levelseg/drlse.hpp"

#include <cmath>

#include "levelseg/errors.hpp"

namespace levelseg {

double potential_p(double s) { return 0.5 * (s - 1.0) * (s - 1.0); }

double reg_energy(const LevelSetField& phi) {
  const ScalarField2D mag = grad_magnitude(grad_central(phi));
  double e = 0.0;
  for (size_t i = 0; i < mag.size(); ++i) e += potential_p(mag[i]);
  return e;
}

double drlse_energy(const LevelSetField& phi, const EdgeMap& g, const DrlseParams& params) {
  if (!g.g.same_shape(phi)) throw SpecError("drlse_energy: edge map does not match phi");
  const ScalarField2D mag = grad_magnitude(grad_central(phi));
  double reg = 0.0, len = 0.0, area = 0.0;
  for (size_t i = 0; i < phi.size(); ++i) {
    reg += potential_p(mag[i]);
    len += g.g[i] * dirac(phi[i], params.eps) * mag[i];
    area += g.g[i] * heaviside_in(phi[i], params.eps);
  }
  return params.mu * reg + params.lambda_len * len + params.alpha * area;
}

LevelSetField drlse_step(const LevelSetField& phi, const EdgeMap& g, const DrlseParams& params) {
  if (!g.g.same_shape(phi)) throw SpecError("drlse_step: edge map does not match phi");
  if (!(params.mu * params.dt < 0.25))
    throw SpecError("drlse_step: stability requires mu * dt < 0.25");

  const VectorField2D gp = grad_central(phi);
  const int w = phi.width(), h = phi.height();
  VectorField2D nrm{ScalarField2D(w, h), ScalarField2D(w, h)};
  VectorField2D gn{ScalarField2D(w, h), ScalarField2D(w, h)};
  for (size_t i = 0; i < phi.size(); ++i) {
    const double mag = std::sqrt(gp.x[i] * gp.x[i] + gp.y[i] * gp.y[i] + kGradEps);
    nrm.x[i] = gp.x[i] / mag;
    nrm.y[i] = gp.y[i] / mag;
    gn.x[i] = g.g[i] * nrm.x[i];
    gn.y[i] = g.g[i] * nrm.y[i];
  }
  const ScalarField2D lap = laplacian(phi);
  const ScalarField2D div_n = divergence(nrm);
  const ScalarField2D div_gn = divergence(gn);

  LevelSetField out(w, h);
  for (size_t i = 0; i < phi.size(); ++i) {
    const double d = dirac(phi[i], params.eps);
    const double v = params.mu * (lap[i] - div_n[i]) +
                     params.lambda_len * d * div_gn[i] +
                     params.alpha * g.g[i] * d;
    out[i] = phi[i] + params.dt * v;
  }
  return out;
}

DrlseModel::DrlseModel(DrlseParams params) : params_(params) {
  if (!(params_.mu * params_.dt < 0.25))
    throw SpecError("drlse: stability requires mu * dt < 0.25");
}

void DrlseModel::prepare(const ScalarField2D& image) {
  edges_ = edge_indicator(image, params_.sigma);
}

LevelSetField DrlseModel::step(const ScalarField2D& image, const LevelSetField& phi) {
  (void)image;
  return drlse_step(phi, edges_, params_);
}

double DrlseModel::energy(const ScalarField2D& image, const LevelSetField& phi) const {
  (void)image;
  return drlse_energy(phi, edges_, params_);
}

}  // namespace levelseg
