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

#ifndef LEVELSEG_FIELD_HPP_
#define LEVELSEG_FIELD_HPP_

#include <cassert>
#include <cstddef>
#include <vector>

namespace levelseg {

// Dense row-major 2-D grid of doubles, unit spacing. The workhorse type
// shared by images (intensities in [0,1]) and level-set functions.
class ScalarField2D {
 public:
  ScalarField2D() = default;
  ScalarField2D(int width, int height, double fill = 0.0)
      : w_(width), h_(height), data_(static_cast<size_t>(width) * height, fill) {
    assert(width > 0 && height > 0);
  }

  int width() const { return w_; }
  int height() const { return h_; }
  size_t size() const { return data_.size(); }

  double& at(int x, int y) { return data_[static_cast<size_t>(y) * w_ + x]; }
  double at(int x, int y) const { return data_[static_cast<size_t>(y) * w_ + x]; }

  // Replicate-edge access; out-of-range indices clamp to the border.
  double at_clamped(int x, int y) const {
    if (x < 0) x = 0;
    if (x >= w_) x = w_ - 1;
    if (y < 0) y = 0;
    if (y >= h_) y = h_ - 1;
    return at(x, y);
  }

  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const ScalarField2D& o) const { return w_ == o.w_ && h_ == o.h_; }

 private:
  int w_ = 0;
  int h_ = 0;
  std::vector<double> data_;
};

// A level-set function phi over the grid. Interior is {phi < 0}; the
// contour is the zero crossing.
using LevelSetField = ScalarField2D;

struct VectorField2D {
  ScalarField2D x;  // d/dx component
  ScalarField2D y;  // d/dy component
};

// Half-width (in pixels) of the smoothed Heaviside / Dirac transition band.
struct Epsilon {
  double px = 1.5;
};

// Added under the square root of every |grad phi| denominator.
inline constexpr double kGradEps = 1e-8;

// Central differences with replicate-edge ghost cells, so the one-sided
// value at a border column for f = x is (f(1) - f(0)) / 2 = 0.5.
VectorField2D grad_central(const ScalarField2D& f);

ScalarField2D grad_magnitude(const VectorField2D& g);

// Central-difference divergence, same ghost-cell convention as grad_central.
ScalarField2D divergence(const VectorField2D& v);

// divergence(grad_central(f)). Keeping it literally the composition makes
// div(grad(u)) == laplacian(u) an identity rather than an approximation,
// which the regularized evolutions below rely on. Stencil reaches +-2, so
// exact polynomial checks only hold two pixels in from the border.
ScalarField2D laplacian(const ScalarField2D& f);

// Mean curvature of the level sets of u:
//   (u_y^2 u_xx - 2 u_x u_y u_xy + u_x^2 u_yy) / (u_x^2 + u_y^2 + eps_grad)^(3/2)
// Equals div(grad u / |grad u|) analytically; 1/r for a radial distance map.
ScalarField2D curvature(const ScalarField2D& u, double eps_grad = kGradEps);

// Normalized sampled Gaussian, radius ceil(3 sigma), sums to 1.
std::vector<double> gaussian_kernel_1d(double sigma);

// Separable convolution with a centered odd-length kernel, reflective
// (symmetric, edge-repeating) boundary. Constants map to themselves.
ScalarField2D convolve_separable(const ScalarField2D& f, const std::vector<double>& kernel);

ScalarField2D gaussian_smooth(const ScalarField2D& f, double sigma);

// Smoothed indicator of the interior {phi < 0}:
//   1                                          phi < -eps
//   0                                          phi >  eps
//   0.5 * (1 - phi/eps - sin(pi phi/eps)/pi)   otherwise
double heaviside_in(double phi, Epsilon eps);

// Its negated derivative, a smoothed Dirac mass on the zero crossing:
//   (1 / 2 eps) * (1 + cos(pi phi / eps))   for |phi| <= eps, else 0.
// dirac(phi) == -d/dphi heaviside_in(phi), and it integrates to 1.
double dirac(double phi, Epsilon eps);

ScalarField2D heaviside_in(const ScalarField2D& phi, Epsilon eps);
ScalarField2D dirac(const ScalarField2D& phi, Epsilon eps);

// Iterates d phi / d tau = S(phi0) (1 - |grad phi|) with the smoothed sign
// S(phi0) = phi0 / sqrt(phi0^2 + 1) and Godunov upwinded |grad phi|.
// Pulls phi toward a signed distance function without moving the zero
// crossing by more than a pixel. steps == 0 returns phi unchanged.
LevelSetField sussman_reinit(LevelSetField phi, int steps, double dtau);

// True if any sample is NaN or infinite.
bool has_non_finite(const ScalarField2D& f);

}  // namespace levelseg

#endif  // LEVELSEG_FIELD_HPP_
