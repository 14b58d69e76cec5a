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

#include "levelseg/field.hpp"

#include <algorithm>
#include <cmath>

#include "levelseg/errors.hpp"

namespace levelseg {

VectorField2D grad_central(const ScalarField2D& f) {
  const int w = f.width(), h = f.height();
  VectorField2D g{ScalarField2D(w, h), ScalarField2D(w, h)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      g.x.at(x, y) = 0.5 * (f.at_clamped(x + 1, y) - f.at_clamped(x - 1, y));
      g.y.at(x, y) = 0.5 * (f.at_clamped(x, y + 1) - f.at_clamped(x, y - 1));
    }
  }
  return g;
}

ScalarField2D grad_magnitude(const VectorField2D& g) {
  const int w = g.x.width(), h = g.x.height();
  ScalarField2D m(w, h);
  for (size_t i = 0; i < m.size(); ++i)
    m[i] = std::sqrt(g.x[i] * g.x[i] + g.y[i] * g.y[i]);
  return m;
}

ScalarField2D divergence(const VectorField2D& v) {
  const int w = v.x.width(), h = v.x.height();
  ScalarField2D d(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double dvx = 0.5 * (v.x.at_clamped(x + 1, y) - v.x.at_clamped(x - 1, y));
      const double dvy = 0.5 * (v.y.at_clamped(x, y + 1) - v.y.at_clamped(x, y - 1));
      d.at(x, y) = dvx + dvy;
    }
  }
  return d;
}

ScalarField2D laplacian(const ScalarField2D& f) { return divergence(grad_central(f)); }

ScalarField2D curvature(const ScalarField2D& u, double eps_grad) {
  const int w = u.width(), h = u.height();
  ScalarField2D k(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double c = u.at(x, y);
      const double xp = u.at_clamped(x + 1, y), xm = u.at_clamped(x - 1, y);
      const double yp = u.at_clamped(x, y + 1), ym = u.at_clamped(x, y - 1);
      const double ux = 0.5 * (xp - xm);
      const double uy = 0.5 * (yp - ym);
      const double uxx = xp - 2.0 * c + xm;
      const double uyy = yp - 2.0 * c + ym;
      const double uxy = 0.25 * (u.at_clamped(x + 1, y + 1) - u.at_clamped(x + 1, y - 1) -
                                 u.at_clamped(x - 1, y + 1) + u.at_clamped(x - 1, y - 1));
      const double q = ux * ux + uy * uy + eps_grad;
      k.at(x, y) = (uy * uy * uxx - 2.0 * ux * uy * uxy + ux * ux * uyy) / (q * std::sqrt(q));
    }
  }
  return k;
}

std::vector<double> gaussian_kernel_1d(double sigma) {
  if (!(sigma > 0.0)) throw SpecError("gaussian kernel: sigma must be positive");
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    k[i + radius] = v;
    sum += v;
  }
  for (double& v : k) v /= sum;
  return k;
}

namespace {

// Symmetric reflection with edge repeat: -1 -> 0, -2 -> 1, n -> n-1, ...
inline int reflect_index(int i, int n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

}  // namespace

ScalarField2D convolve_separable(const ScalarField2D& f, const std::vector<double>& kernel) {
  if (kernel.empty() || kernel.size() % 2 == 0)
    throw SpecError("convolve_separable: kernel length must be odd");
  const int radius = static_cast<int>(kernel.size() / 2);
  const int taps = 2 * radius + 1;
  const int w = f.width(), h = f.height();
  const double* kw = kernel.data();

  // Both passes accumulate taps in ascending offset order everywhere, so
  // the branch-free interior fast path is bit-identical to the reflected
  // border path evaluated at interior pixels.
  ScalarField2D tmp(w, h);
  for (int y = 0; y < h; ++y) {
    const double* src = f.data().data() + static_cast<size_t>(y) * w;
    double* dst = tmp.data().data() + static_cast<size_t>(y) * w;
    const int interior_end = w - radius;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      if (x >= radius && x < interior_end) {
        const double* s = src + (x - radius);
        for (int t = 0; t < taps; ++t) acc += kw[t] * s[t];
      } else {
        for (int o = -radius; o <= radius; ++o)
          acc += kw[o + radius] * src[reflect_index(x + o, w)];
      }
      dst[x] = acc;
    }
  }
  ScalarField2D out(w, h);
  for (int y = 0; y < h; ++y) {
    double* dst = out.data().data() + static_cast<size_t>(y) * w;
    for (int x = 0; x < w; ++x) dst[x] = 0.0;
    for (int t = 0; t < taps; ++t) {
      const double kv = kw[t];
      const double* s =
          tmp.data().data() + static_cast<size_t>(reflect_index(y - radius + t, h)) * w;
      for (int x = 0; x < w; ++x) dst[x] += kv * s[x];
    }
  }
  return out;
}

ScalarField2D gaussian_smooth(const ScalarField2D& f, double sigma) {
  return convolve_separable(f, gaussian_kernel_1d(sigma));
}

double heaviside_in(double phi, Epsilon eps) {
  const double e = eps.px;
  // Closed comparisons so H is exactly 0/1 at the band edge; the sine term
  // would otherwise leak a few ulps outside [0, 1].
  if (phi <= -e) return 1.0;
  if (phi >= e) return 0.0;
  return 0.5 * (1.0 - phi / e - std::sin(M_PI * phi / e) / M_PI);
}

double dirac(double phi, Epsilon eps) {
  const double e = eps.px;
  if (phi <= -e || phi >= e) return 0.0;
  return (1.0 + std::cos(M_PI * phi / e)) / (2.0 * e);
}

ScalarField2D heaviside_in(const ScalarField2D& phi, Epsilon eps) {
  ScalarField2D out(phi.width(), phi.height());
  for (size_t i = 0; i < phi.size(); ++i) out[i] = heaviside_in(phi[i], eps);
  return out;
}

ScalarField2D dirac(const ScalarField2D& phi, Epsilon eps) {
  ScalarField2D out(phi.width(), phi.height());
  for (size_t i = 0; i < phi.size(); ++i) out[i] = dirac(phi[i], eps);
  return out;
}

LevelSetField sussman_reinit(LevelSetField phi, int steps, double dtau) {
  if (steps < 0) throw SpecError("sussman_reinit: steps must be >= 0");
  if (!(dtau > 0.0) || dtau > 0.5) throw SpecError("sussman_reinit: need 0 < dtau <= 0.5");
  const int w = phi.width(), h = phi.height();

  // S is frozen at the input field so the zero crossing stays anchored.
  std::vector<double> s(phi.size());
  for (size_t i = 0; i < phi.size(); ++i)
    s[i] = phi[i] / std::sqrt(phi[i] * phi[i] + 1.0);

  LevelSetField next(w, h);
  for (int it = 0; it < steps; ++it) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double c = phi.at(x, y);
        const double a = c - phi.at_clamped(x - 1, y);  // backward x
        const double b = phi.at_clamped(x + 1, y) - c;  // forward x
        const double cc = c - phi.at_clamped(x, y - 1);
        const double d = phi.at_clamped(x, y + 1) - c;
        const double sg = s[static_cast<size_t>(y) * w + x];
        double g;
        if (sg > 0.0) {
          const double ap = std::max(a, 0.0), bm = std::min(b, 0.0);
          const double cp = std::max(cc, 0.0), dm = std::min(d, 0.0);
          g = std::sqrt(std::max(ap * ap, bm * bm) + std::max(cp * cp, dm * dm));
        } else {
          const double am = std::min(a, 0.0), bp = std::max(b, 0.0);
          const double cm = std::min(cc, 0.0), dp = std::max(d, 0.0);
          g = std::sqrt(std::max(am * am, bp * bp) + std::max(cm * cm, dp * dp));
        }
        next.at(x, y) = c + dtau * sg * (1.0 - g);
      }
    }
    std::swap(phi, next);
  }
  return phi;
}

bool has_non_finite(const ScalarField2D& f) {
  for (size_t i = 0; i < f.size(); ++i)
    if (!std::isfinite(f[i])) return true;
  return false;
}

}  // namespace levelseg
