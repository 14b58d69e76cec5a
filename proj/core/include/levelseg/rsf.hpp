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

#ifndef LEVELSEG_RSF_HPP_
#define LEVELSEG_RSF_HPP_

#include <vector>

#include "levelseg/field.hpp"
#include "levelseg/model.hpp"

namespace levelseg {

// Region-scalable fitting: each pixel is explained by two smooth fitting
// functions weighted by a Gaussian window, so intensity only has to be
// homogeneous at the kernel scale, not globally. No reinitialization; the
// mu_reg term keeps phi well behaved.
struct RsfParams {
  double sigma_k = 3.0;   // kernel scale; small = local, huge = Chan-Vese
  double lambda1 = 1.0;   // interior fitting weight
  double lambda2 = 1.0;   // exterior fitting weight
  double nu = 0.003;      // contour length (intensities are in [0,1])
  double mu_reg = 1.0;    // distance regularization; mu_reg * dt < 0.25
  Epsilon eps{1.5};
  double dt = 0.1;
};

// Truncated sampled Gaussian, radius ceil(3 sigma_k), normalized so the
// weights sum to 1. The 2-D window is the separable product.
struct KernelProfile {
  double sigma = 0.0;
  int radius = 0;
  std::vector<double> weights;  // size 2*radius+1, index offset+radius

  double at(int offset) const {
    const int i = offset + radius;
    return (i < 0 || i >= static_cast<int>(weights.size())) ? 0.0 : weights[i];
  }
  double at2(int dx, int dy) const { return at(dx) * at(dy); }
};

KernelProfile kernel_profile(double sigma_k);

// f_i = K * (M_i I) / K * (M_i) with M1 = H_in(phi), M2 = 1 - H_in(phi).
// Where a window sees (almost) none of a region (denominator < 1e-9) the
// fitting function falls back to the unconditioned local average K * I.
struct FittingPair {
  ScalarField2D f1;  // interior
  ScalarField2D f2;  // exterior
};
FittingPair fitting_functions(const ScalarField2D& image, const LevelSetField& phi,
                              const RsfParams& params);

// Pointwise fitting residual e_i = I^2 - 2 I (K*f_i) + K*(f_i^2), i.e. the
// kernel-weighted square misfit of I against f_i; >= 0, clamped against
// rounding. Relies on the convolution mapping constants to themselves.
struct FittingResiduals {
  ScalarField2D e1;
  ScalarField2D e2;
};
FittingResiduals fitting_residuals(const ScalarField2D& image, const FittingPair& f,
                                   const KernelProfile& k);

// Data term: sum lambda1 e1 H_in + lambda2 e2 (1 - H_in).
double rsf_energy(const ScalarField2D& image, const LevelSetField& phi, const RsfParams& params);

// phi += dt * ( dirac(phi) (lambda1 e1 - lambda2 e2)
//             + nu dirac(phi) div(grad phi / |grad phi|)
//             + mu_reg (lap phi - div(grad phi / |grad phi|)) )
// A pixel whose interior misfit e1 exceeds e2 is pushed out of the interior.
LevelSetField rsf_step(const ScalarField2D& image, const LevelSetField& phi,
                       const RsfParams& params);

class RsfModel : public EvolutionModel {
 public:
  explicit RsfModel(RsfParams params);

  std::string_view name() const override { return "rsf"; }
  // Caches the kernel and K*I, the only image-dependent transform.
  void prepare(const ScalarField2D& image) override;
  LevelSetField step(const ScalarField2D& image, const LevelSetField& phi) override;
  // Full descended functional: data term + nu-weighted contour length +
  // mu_reg-weighted distance penalty. The data term alone is not a
  // Lyapunov function of the flow.
  double energy(const ScalarField2D& image, const LevelSetField& phi) const override;

 private:
  RsfParams params_;
  KernelProfile kernel_;
  ScalarField2D local_avg_;
};

}  // namespace levelseg

#endif  // LEVELSEG_RSF_HPP_
