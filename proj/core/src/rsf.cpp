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

#include "levelseg/rsf.hpp"

#include <algorithm>
#include <cmath>

#include "levelseg/drlse.hpp"  // potential_p
#include "levelseg/errors.hpp"

namespace levelseg {

KernelProfile kernel_profile(double sigma_k) {
  if (!(sigma_k > 0.0)) throw SpecError("kernel_profile: sigma must be positive");
  KernelProfile k;
  k.sigma = sigma_k;
  k.weights = gaussian_kernel_1d(sigma_k);
  k.radius = static_cast<int>(k.weights.size() / 2);
  return k;
}

namespace {

void require_same_shape(const ScalarField2D& image, const LevelSetField& phi, const char* who) {
  if (!image.same_shape(phi))
    throw SpecError(std::string(who) + ": image and phi dimensions differ");
}

// The exterior quantities come from the interior ones: the kernel sums to 1
// and the convolution maps constants to themselves, so K*(1-M) = 1 - K*M
// and by linearity K*((1-M) I) = K*I - K*(M I). Saves two transforms per
// evaluation; the difference from convolving directly is pure rounding.
FittingPair fit_with_avg(const ScalarField2D& image, const LevelSetField& phi,
                         const RsfParams& params, const KernelProfile& k,
                         const ScalarField2D& local_avg) {
  const int w = image.width(), h = image.height();
  ScalarField2D mask_in(w, h), masked_in(w, h);
  for (size_t i = 0; i < image.size(); ++i) {
    const double m = heaviside_in(phi[i], params.eps);
    mask_in[i] = m;
    masked_in[i] = m * image[i];
  }
  const ScalarField2D den1 = convolve_separable(mask_in, k.weights);
  const ScalarField2D num1 = convolve_separable(masked_in, k.weights);

  FittingPair f{ScalarField2D(w, h), ScalarField2D(w, h)};
  for (size_t i = 0; i < image.size(); ++i) {
    const double den2 = 1.0 - den1[i];
    const double num2 = local_avg[i] - num1[i];
    f.f1[i] = den1[i] < 1e-9 ? local_avg[i] : num1[i] / den1[i];
    f.f2[i] = den2 < 1e-9 ? local_avg[i] : num2 / den2;
  }
  return f;
}

// Assembles the update. The fitting force lambda1 e1 - lambda2 e2 expands to
// (lambda1 - lambda2) I^2 - 2 I K*(l1 f1 - l2 f2) + K*(l1 f1^2 - l2 f2^2),
// two transforms instead of the four the individual residuals would need.
LevelSetField step_with_avg(const ScalarField2D& image, const LevelSetField& phi,
                            const RsfParams& params, const KernelProfile& k,
                            const ScalarField2D& local_avg) {
  if (!(params.mu_reg * params.dt < 0.25))
    throw SpecError("rsf_step: stability requires mu_reg * dt < 0.25");
  const FittingPair f = fit_with_avg(image, phi, params, k, local_avg);

  const int w = phi.width(), h = phi.height();
  ScalarField2D q(w, h), qsq(w, h);
  for (size_t i = 0; i < phi.size(); ++i) {
    q[i] = params.lambda1 * f.f1[i] - params.lambda2 * f.f2[i];
    qsq[i] = params.lambda1 * f.f1[i] * f.f1[i] - params.lambda2 * f.f2[i] * f.f2[i];
  }
  const ScalarField2D kq = convolve_separable(q, k.weights);
  const ScalarField2D kqsq = convolve_separable(qsq, k.weights);

  const VectorField2D gp = grad_central(phi);
  VectorField2D nrm{ScalarField2D(w, h), ScalarField2D(w, h)};
  for (size_t i = 0; i < phi.size(); ++i) {
    const double mag = std::sqrt(gp.x[i] * gp.x[i] + gp.y[i] * gp.y[i] + kGradEps);
    nrm.x[i] = gp.x[i] / mag;
    nrm.y[i] = gp.y[i] / mag;
  }
  const ScalarField2D div_n = divergence(nrm);
  const ScalarField2D lap = laplacian(phi);

  const double dl = params.lambda1 - params.lambda2;
  LevelSetField out(w, h);
  for (size_t i = 0; i < phi.size(); ++i) {
    const double d = dirac(phi[i], params.eps);
    const double fit_force = dl * image[i] * image[i] - 2.0 * image[i] * kq[i] + kqsq[i];
    const double v = d * fit_force + params.nu * d * div_n[i] +
                     params.mu_reg * (lap[i] - div_n[i]);
    out[i] = phi[i] + params.dt * v;
  }
  return out;
}

}  // namespace

FittingPair fitting_functions(const ScalarField2D& image, const LevelSetField& phi,
                              const RsfParams& params) {
  require_same_shape(image, phi, "fitting_functions");
  const KernelProfile k = kernel_profile(params.sigma_k);
  return fit_with_avg(image, phi, params, k, convolve_separable(image, k.weights));
}

FittingResiduals fitting_residuals(const ScalarField2D& image, const FittingPair& f,
                                   const KernelProfile& k) {
  const int w = image.width(), h = image.height();
  ScalarField2D f1sq(w, h), f2sq(w, h);
  for (size_t i = 0; i < image.size(); ++i) {
    f1sq[i] = f.f1[i] * f.f1[i];
    f2sq[i] = f.f2[i] * f.f2[i];
  }
  const ScalarField2D kf1 = convolve_separable(f.f1, k.weights);
  const ScalarField2D kf2 = convolve_separable(f.f2, k.weights);
  const ScalarField2D kf1sq = convolve_separable(f1sq, k.weights);
  const ScalarField2D kf2sq = convolve_separable(f2sq, k.weights);

  FittingResiduals r{ScalarField2D(w, h), ScalarField2D(w, h)};
  for (size_t i = 0; i < image.size(); ++i) {
    const double ii = image[i] * image[i];
    // Algebraically sum_y K(y-x) (I(x) - f_i(y))^2, so only rounding can
    // make it negative.
    r.e1[i] = std::max(0.0, ii - 2.0 * image[i] * kf1[i] + kf1sq[i]);
    r.e2[i] = std::max(0.0, ii - 2.0 * image[i] * kf2[i] + kf2sq[i]);
  }
  return r;
}

double rsf_energy(const ScalarField2D& image, const LevelSetField& phi, const RsfParams& params) {
  require_same_shape(image, phi, "rsf_energy");
  const KernelProfile k = kernel_profile(params.sigma_k);
  const FittingPair f = fitting_functions(image, phi, params);
  const FittingResiduals r = fitting_residuals(image, f, k);
  double e = 0.0;
  for (size_t i = 0; i < image.size(); ++i) {
    const double hm = heaviside_in(phi[i], params.eps);
    e += params.lambda1 * r.e1[i] * hm + params.lambda2 * r.e2[i] * (1.0 - hm);
  }
  return e;
}

LevelSetField rsf_step(const ScalarField2D& image, const LevelSetField& phi,
                       const RsfParams& params) {
  require_same_shape(image, phi, "rsf_step");
  const KernelProfile k = kernel_profile(params.sigma_k);
  return step_with_avg(image, phi, params, k, convolve_separable(image, k.weights));
}

RsfModel::RsfModel(RsfParams params) : params_(params) {
  if (!(params_.mu_reg * params_.dt < 0.25))
    throw SpecError("rsf: stability requires mu_reg * dt < 0.25");
}

void RsfModel::prepare(const ScalarField2D& image) {
  kernel_ = kernel_profile(params_.sigma_k);
  local_avg_ = convolve_separable(image, kernel_.weights);
}

LevelSetField RsfModel::step(const ScalarField2D& image, const LevelSetField& phi) {
  // Same bits as rsf_step: the cached transform is the identical
  // computation, just hoisted out of the loop.
  if (!local_avg_.same_shape(image)) prepare(image);
  return step_with_avg(image, phi, params_, kernel_, local_avg_);
}

double RsfModel::energy(const ScalarField2D& image, const LevelSetField& phi) const {
  const ScalarField2D mag = grad_magnitude(grad_central(phi));
  double len = 0.0, reg = 0.0;
  for (size_t i = 0; i < phi.size(); ++i) {
    len += dirac(phi[i], params_.eps) * mag[i];
    reg += potential_p(mag[i]);
  }
  return rsf_energy(image, phi, params_) + params_.nu * len + params_.mu_reg * reg;
}

}  // namespace levelseg
