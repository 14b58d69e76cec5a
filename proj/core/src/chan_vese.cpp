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

#include "levelseg/chan_vese.hpp"

#include <cmath>

#include "levelseg/errors.hpp"

namespace levelseg {

namespace {

void require_same_shape(const ScalarField2D& image, const LevelSetField& phi, const char* who) {
  if (!image.same_shape(phi))
    throw SpecError(std::string(who) + ": image and phi dimensions differ");
}

}  // namespace

RegionMeans region_means(const ScalarField2D& image, const LevelSetField& phi, Epsilon eps) {
  require_same_shape(image, phi, "region_means");
  double in_mass = 0.0, in_sum = 0.0, total = 0.0;
  for (size_t i = 0; i < image.size(); ++i) {
    const double h = heaviside_in(phi[i], eps);
    in_mass += h;
    in_sum += h * image[i];
    total += image[i];
  }
  const double n = static_cast<double>(image.size());
  const double out_mass = n - in_mass;
  const double global = total / n;
  RegionMeans m;
  m.c1 = in_mass < 1e-9 ? global : in_sum / in_mass;
  m.c2 = out_mass < 1e-9 ? global : (total - in_sum) / out_mass;
  return m;
}

double cv_energy(const ScalarField2D& image, const LevelSetField& phi, const RegionMeans& means,
                 double lambda_len, Epsilon eps) {
  require_same_shape(image, phi, "cv_energy");
  const ScalarField2D mag = grad_magnitude(grad_central(phi));
  double fit = 0.0, len = 0.0;
  for (size_t i = 0; i < image.size(); ++i) {
    const double h = heaviside_in(phi[i], eps);
    const double d1 = image[i] - means.c1;
    const double d2 = image[i] - means.c2;
    fit += d1 * d1 * h + d2 * d2 * (1.0 - h);
    len += dirac(phi[i], eps) * mag[i];
  }
  return fit + lambda_len * len;
}

LevelSetField cv_step(const ScalarField2D& image, const LevelSetField& phi,
                      const ChanVeseParams& params) {
  require_same_shape(image, phi, "cv_step");
  const RegionMeans m = region_means(image, phi, params.eps);

  VectorField2D g = grad_central(phi);
  for (size_t i = 0; i < g.x.size(); ++i) {
    const double mag = std::sqrt(g.x[i] * g.x[i] + g.y[i] * g.y[i] + kGradEps);
    g.x[i] /= mag;
    g.y[i] /= mag;
  }
  const ScalarField2D curv = divergence(g);

  LevelSetField out(phi.width(), phi.height());
  for (size_t i = 0; i < phi.size(); ++i) {
    const double d1 = image[i] - m.c1;
    const double d2 = image[i] - m.c2;
    const double force = params.lambda_len * curv[i] + d1 * d1 - d2 * d2;
    out[i] = phi[i] + params.dt * dirac(phi[i], params.eps) * force;
  }
  return out;
}

LevelSetField ChanVeseModel::step(const ScalarField2D& image, const LevelSetField& phi) {
  return cv_step(image, phi, params_);
}

double ChanVeseModel::energy(const ScalarField2D& image, const LevelSetField& phi) const {
  return cv_energy(image, phi, region_means(image, phi, params_.eps), params_.lambda_len,
                   params_.eps);
}

}  // namespace levelseg
