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

#include "levelseg/localized.hpp"

#include <algorithm>
#include <cmath>

#include "levelseg/errors.hpp"

namespace levelseg {

double default_ball_radius(int width, int height) {
  return std::max(5.0, std::round(0.1 * std::min(width, height)));
}

bool ball_mask_contains(int x0, int y0, int x1, int y1, double radius) {
  const double dx = x1 - x0, dy = y1 - y0;
  return dx * dx + dy * dy < radius * radius;
}

std::vector<std::pair<int, int>> ball_offsets(double radius) {
  if (!(radius > 0.0)) throw SpecError("ball_offsets: radius must be positive");
  const int r = static_cast<int>(std::ceil(radius));
  std::vector<std::pair<int, int>> out;
  for (int dy = -r; dy <= r; ++dy)
    for (int dx = -r; dx <= r; ++dx)
      if (static_cast<double>(dx) * dx + static_cast<double>(dy) * dy < radius * radius)
        out.emplace_back(dx, dy);
  return out;
}

namespace {

void require_same_shape(const ScalarField2D& image, const LevelSetField& phi, const char* who) {
  if (!image.same_shape(phi))
    throw SpecError(std::string(who) + ": image and phi dimensions differ");
}

double resolved_radius(const LocalizedParams& p, const ScalarField2D& image) {
  return p.radius > 0.0 ? p.radius : default_ball_radius(image.width(), image.height());
}

}  // namespace

LocalStats local_stats(const ScalarField2D& image, const LevelSetField& phi,
                       const LocalizedParams& params) {
  require_same_shape(image, phi, "local_stats");
  const int w = image.width(), h = image.height();
  const double radius = resolved_radius(params, image);
  const auto offsets = ball_offsets(radius);

  LocalStats s{ScalarField2D(w, h), ScalarField2D(w, h),
               std::vector<uint8_t>(image.size(), 0)};
  const ScalarField2D hm = heaviside_in(phi, params.eps);

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = static_cast<size_t>(y) * w + x;
      if (std::abs(phi[i]) > params.eps.px) continue;
      s.band[i] = 1;
      double in_mass = 0.0, in_sum = 0.0, out_mass = 0.0, out_sum = 0.0;
      for (const auto& [dx, dy] : offsets) {
        const int xx = x + dx, yy = y + dy;
        if (xx < 0 || xx >= w || yy < 0 || yy >= h) continue;  // clipped at borders
        const double m = hm.at(xx, yy);
        const double v = image.at(xx, yy);
        in_mass += m;
        in_sum += m * v;
        out_mass += 1.0 - m;
        out_sum += (1.0 - m) * v;
      }
      const bool in_empty = in_mass < 1e-9;
      const bool out_empty = out_mass < 1e-9;
      const double u_raw = in_empty ? 0.0 : in_sum / in_mass;
      const double v_raw = out_empty ? 0.0 : out_sum / out_mass;
      // An empty side inherits the other mean, zeroing the competition.
      s.u_loc[i] = in_empty ? v_raw : u_raw;
      s.v_loc[i] = out_empty ? u_raw : v_raw;
    }
  }
  return s;
}

double localized_energy(const ScalarField2D& image, const LevelSetField& phi,
                        const LocalizedParams& params) {
  require_same_shape(image, phi, "localized_energy");
  const int w = image.width(), h = image.height();
  const double radius = resolved_radius(params, image);
  const auto offsets = ball_offsets(radius);
  const LocalStats s = local_stats(image, phi, params);
  const ScalarField2D hm = heaviside_in(phi, params.eps);

  double e = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = static_cast<size_t>(y) * w + x;
      if (!s.band[i]) continue;
      const double dx_w = dirac(phi[i], params.eps);
      if (dx_w == 0.0) continue;
      double acc = 0.0;
      for (const auto& [dx, dy] : offsets) {
        const int xx = x + dx, yy = y + dy;
        if (xx < 0 || xx >= w || yy < 0 || yy >= h) continue;
        const double m = hm.at(xx, yy);
        const double du = image.at(xx, yy) - s.u_loc[i];
        const double dv = image.at(xx, yy) - s.v_loc[i];
        acc += m * du * du + (1.0 - m) * dv * dv;
      }
      e += dx_w * acc;
    }
  }
  return e;
}

LevelSetField localized_step(const ScalarField2D& image, const LevelSetField& phi,
                             const LocalizedParams& params) {
  require_same_shape(image, phi, "localized_step");
  if (!(params.cfl > 0.0)) throw SpecError("localized_step: cfl must be positive");
  const int w = image.width(), h = image.height();
  const double radius = resolved_radius(params, image);
  const auto offsets = ball_offsets(radius);
  const LocalStats s = local_stats(image, phi, params);

  VectorField2D g = grad_central(phi);
  for (size_t i = 0; i < g.x.size(); ++i) {
    const double mag = std::sqrt(g.x[i] * g.x[i] + g.y[i] * g.y[i] + kGradEps);
    g.x[i] /= mag;
    g.y[i] /= mag;
  }
  const ScalarField2D curv = divergence(g);

  ScalarField2D speed(w, h, 0.0);
  double max_speed = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = static_cast<size_t>(y) * w + x;
      if (!s.band[i]) continue;  // off band the speed stays exactly 0
      const double dx_w = dirac(phi[i], params.eps);
      double competition = 0.0;
      for (const auto& [dx, dy] : offsets) {
        const int xx = x + dx, yy = y + dy;
        if (xx < 0 || xx >= w || yy < 0 || yy >= h) continue;
        const double dy_w = dirac(phi.at(xx, yy), params.eps);
        if (dy_w == 0.0) continue;
        const double du = image.at(xx, yy) - s.u_loc[i];
        const double dv = image.at(xx, yy) - s.v_loc[i];
        competition += dy_w * (du * du - dv * dv);
      }
      const double v = dx_w * competition + params.lambda_len * dx_w * curv[i];
      speed[i] = v;
      max_speed = std::max(max_speed, std::abs(v));
    }
  }

  const double dt = params.cfl / (max_speed + 1e-12);
  LevelSetField out(w, h);
  for (size_t i = 0; i < phi.size(); ++i) out[i] = phi[i] + dt * speed[i];
  return out;
}

void LocalizedModel::prepare(const ScalarField2D& image) {
  if (params_.radius <= 0.0)
    params_.radius = default_ball_radius(image.width(), image.height());
}

LevelSetField LocalizedModel::step(const ScalarField2D& image, const LevelSetField& phi) {
  return localized_step(image, phi, params_);
}

double LocalizedModel::energy(const ScalarField2D& image, const LevelSetField& phi) const {
  return localized_energy(image, phi, params_);
}

}  // namespace levelseg
