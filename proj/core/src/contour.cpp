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

#include "levelseg/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "levelseg/io_util.hpp"

namespace levelseg {

namespace {

// Cell edges are graph nodes. A horizontal edge at (x, y) runs to (x+1, y),
// a vertical one to (x, y+1); both fit in one key space since the x range
// of horizontal edges and the y range of vertical ones are each one short.
inline int edge_key(int x, int y, int orient, int w) { return ((y * w + x) << 1) | orient; }

struct CrossGraph {
  std::vector<double> px, py;      // crossing point per edge key
  std::vector<int32_t> adj;        // 2 slots per key, -1 when unused
  std::vector<uint8_t> deg;

  explicit CrossGraph(size_t keys)
      : px(keys, 0.0), py(keys, 0.0), adj(keys * 2, -1), deg(keys, 0) {}

  void link(int a, int b) {
    adj[2 * a + deg[a]++] = b;
    adj[2 * b + deg[b]++] = a;
  }
};

}  // namespace

std::vector<Contour> extract_zero_set(const LevelSetField& phi) {
  const int w = phi.width();
  const int h = phi.height();
  if (w < 2 || h < 2) return {};

  // Nudge exact zeros positive so every sample has a definite sign.
  std::vector<double> v(phi.size());
  for (size_t i = 0; i < v.size(); ++i) {
    const double d = phi[i];
    v[i] = (d == 0.0) ? 1e-12 : d;
  }
  const auto val = [&](int x, int y) { return v[static_cast<size_t>(y) * w + x]; };

  const size_t keys = static_cast<size_t>(w) * h * 2;
  CrossGraph g(keys);

  // Crossing points along pixel edges.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x + 1 < w; ++x) {
      const double a = val(x, y), b = val(x + 1, y);
      if ((a < 0.0) != (b < 0.0)) {
        const int k = edge_key(x, y, 0, w);
        const double t = a / (a - b);
        g.px[k] = x + t;
        g.py[k] = y;
      }
    }
  }
  for (int y = 0; y + 1 < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double a = val(x, y), b = val(x, y + 1);
      if ((a < 0.0) != (b < 0.0)) {
        const int k = edge_key(x, y, 1, w);
        const double t = a / (a - b);
        g.px[k] = x;
        g.py[k] = y + t;
      }
    }
  }

  // Per cell, pair up crossed edges into segments. Bits: 1 top-left,
  // 2 top-right, 4 bottom-right, 8 bottom-left, set when negative.
  for (int cy = 0; cy + 1 < h; ++cy) {
    for (int cx = 0; cx + 1 < w; ++cx) {
      const double a = val(cx, cy), b = val(cx + 1, cy);
      const double c = val(cx + 1, cy + 1), d = val(cx, cy + 1);
      int code = 0;
      if (a < 0.0) code |= 1;
      if (b < 0.0) code |= 2;
      if (c < 0.0) code |= 4;
      if (d < 0.0) code |= 8;
      if (code == 0 || code == 15) continue;

      const int top = edge_key(cx, cy, 0, w);
      const int right = edge_key(cx + 1, cy, 1, w);
      const int bottom = edge_key(cx, cy + 1, 0, w);
      const int left = edge_key(cx, cy, 1, w);

      switch (code) {
        case 1: case 14: g.link(top, left); break;
        case 2: case 13: g.link(top, right); break;
        case 4: case 11: g.link(right, bottom); break;
        case 8: case 7: g.link(bottom, left); break;
        case 3: case 12: g.link(left, right); break;
        case 6: case 9: g.link(top, bottom); break;
        case 5:   // negative corners on the top-left / bottom-right diagonal
          if ((a + b + c + d) * 0.25 < 0.0) {
            g.link(top, right);
            g.link(bottom, left);
          } else {
            g.link(top, left);
            g.link(right, bottom);
          }
          break;
        case 10:  // negative corners on the other diagonal
          if ((a + b + c + d) * 0.25 < 0.0) {
            g.link(top, left);
            g.link(right, bottom);
          } else {
            g.link(top, right);
            g.link(bottom, left);
          }
          break;
        default: break;
      }
    }
  }

  // Every crossed edge is paired once by each adjacent cell, so interior
  // edges have degree 2 and border edges degree 1. Trace open chains from
  // the degree-1 edges first, then whatever remains forms closed loops.
  std::vector<uint8_t> visited(keys, 0);
  std::vector<Contour> out;

  const auto walk = [&](int start, bool want_closed) {
    Contour c;
    c.closed = want_closed;
    int prev = -1, cur = start;
    visited[cur] = 1;
    c.vertices.emplace_back(g.px[cur], g.py[cur]);
    while (true) {
      int nxt = -1;
      for (int i = 0; i < g.deg[cur]; ++i) {
        const int cand = g.adj[2 * cur + i];
        if (cand != prev) { nxt = cand; break; }
      }
      if (nxt < 0) break;
      if (want_closed && nxt == start) break;
      prev = cur;
      cur = nxt;
      visited[cur] = 1;
      c.vertices.emplace_back(g.px[cur], g.py[cur]);
    }
    out.push_back(std::move(c));
  };

  for (size_t k = 0; k < keys; ++k)
    if (g.deg[k] == 1 && !visited[k]) walk(static_cast<int>(k), false);
  for (size_t k = 0; k < keys; ++k)
    if (g.deg[k] == 2 && !visited[k]) walk(static_cast<int>(k), true);

  return out;
}

double contour_length(const Contour& c) {
  const auto& p = c.vertices;
  if (p.size() < 2) return 0.0;
  double len = 0.0;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    len += std::hypot(p[i + 1].first - p[i].first, p[i + 1].second - p[i].second);
  if (c.closed)
    len += std::hypot(p.front().first - p.back().first, p.front().second - p.back().second);
  return len;
}

std::vector<Contour> filter_by_length(std::vector<Contour> contours, double min_len) {
  std::vector<Contour> kept;
  kept.reserve(contours.size());
  for (auto& c : contours)
    if (contour_length(c) >= min_len) kept.push_back(std::move(c));
  return kept;
}

namespace {

void draw_segment(RasterImage& img, double xa, double ya, double xb, double yb) {
  int x0 = static_cast<int>(std::lround(xa)), y0 = static_cast<int>(std::lround(ya));
  const int x1 = static_cast<int>(std::lround(xb)), y1 = static_cast<int>(std::lround(yb));
  const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    if (x0 >= 0 && x0 < img.width && y0 >= 0 && y0 < img.height) {
      uint16_t* p = &img.samples[(static_cast<size_t>(y0) * img.width + x0) * 3];
      p[0] = img.maxval;
      p[1] = 0;
      p[2] = 0;
    }
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) { err += dy; x0 += sx; }
    if (e2 <= dx) { err += dx; y0 += sy; }
  }
}

}  // namespace

RasterImage render_overlay(const ScalarField2D& image, const std::vector<Contour>& contours) {
  RasterImage img;
  img.width = image.width();
  img.height = image.height();
  img.channels = 3;
  img.maxval = 255;
  img.samples.resize(static_cast<size_t>(img.width) * img.height * 3);
  for (size_t i = 0; i < image.size(); ++i) {
    const double c = std::clamp(image[i], 0.0, 1.0);
    const auto s = static_cast<uint16_t>(std::lround(c * 255.0));
    img.samples[i * 3] = img.samples[i * 3 + 1] = img.samples[i * 3 + 2] = s;
  }
  for (const auto& c : contours) {
    const auto& p = c.vertices;
    if (p.size() == 1) {
      draw_segment(img, p[0].first, p[0].second, p[0].first, p[0].second);
      continue;
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
      draw_segment(img, p[i].first, p[i].second, p[i + 1].first, p[i + 1].second);
    if (c.closed && p.size() > 2)
      draw_segment(img, p.back().first, p.back().second, p.front().first, p.front().second);
  }
  return img;
}

std::string contours_to_csv(const std::vector<Contour>& contours) {
  std::string out = "contour_id,vertex_index,x,y\n";
  char row[96];
  for (size_t ci = 0; ci < contours.size(); ++ci) {
    const auto& p = contours[ci].vertices;
    for (size_t vi = 0; vi < p.size(); ++vi) {
      std::snprintf(row, sizeof(row), "%zu,%zu,%.6f,%.6f\n", ci, vi, p[vi].first,
                    p[vi].second);
      out += row;
    }
  }
  return out;
}

std::string contours_to_svg(const std::vector<Contour>& contours, int width, int height) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                "viewBox=\"0 0 %d %d\">\n",
                width, height, width, height);
  std::string out = buf;
  if (contours.empty()) {
    out += "<g/>\n</svg>\n";
    return out;
  }
  out += "<g fill=\"none\" stroke=\"#ff0000\" stroke-width=\"1\">\n";
  for (const auto& c : contours) {
    out += c.closed ? "<polygon points=\"" : "<polyline points=\"";
    for (size_t i = 0; i < c.vertices.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%s%.6f,%.6f", i ? " " : "", c.vertices[i].first,
                    c.vertices[i].second);
      out += buf;
    }
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

void export_contours_csv(const std::vector<Contour>& contours,
                         const std::filesystem::path& path) {
  atomic_write_file(path, contours_to_csv(contours));
}

void export_contours_svg(const std::vector<Contour>& contours, int width, int height,
                         const std::filesystem::path& path) {
  atomic_write_file(path, contours_to_svg(contours, width, height));
}

}  // namespace levelseg
