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

#include "levelseg/init_contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "levelseg/errors.hpp"

namespace levelseg {

ShapeSpec ShapeSpec::circle(double cx, double cy, double r) {
  if (!(r > 0.0)) throw SpecError("circle: radius must be positive");
  return ShapeSpec{Kind::kCircle, cx, cy, r, 0.0};
}

ShapeSpec ShapeSpec::rect(double x0, double y0, double x1, double y1) {
  if (!(x0 < x1) || !(y0 < y1))
    throw SpecError("rect: need x0 < x1 and y0 < y1");
  return ShapeSpec{Kind::kRect, x0, y0, x1, y1};
}

ShapeSpec parse_shape_spec(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw SpecError("bad shape spec '" + text + "': expected circle:cx,cy,r or rect:x0,y0,x1,y1");
  const std::string kind = text.substr(0, colon);
  std::vector<double> nums;
  {
    std::istringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t used = 0;
      double v;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        throw SpecError("bad shape spec '" + text + "': '" + item + "' is not a number");
      }
      if (used != item.size())
        throw SpecError("bad shape spec '" + text + "': '" + item + "' is not a number");
      nums.push_back(v);
    }
  }
  if (kind == "circle") {
    if (nums.size() != 3)
      throw SpecError("bad shape spec '" + text + "': circle takes cx,cy,r");
    return ShapeSpec::circle(nums[0], nums[1], nums[2]);
  }
  if (kind == "rect") {
    if (nums.size() != 4)
      throw SpecError("bad shape spec '" + text + "': rect takes x0,y0,x1,y1");
    return ShapeSpec::rect(nums[0], nums[1], nums[2], nums[3]);
  }
  throw SpecError("bad shape spec '" + text + "': unknown shape '" + kind + "'");
}

std::string shape_spec_to_string(const ShapeSpec& s) {
  char buf[128];
  if (s.kind == ShapeSpec::Kind::kCircle)
    std::snprintf(buf, sizeof buf, "circle:%g,%g,%g", s.a, s.b, s.c);
  else
    std::snprintf(buf, sizeof buf, "rect:%g,%g,%g,%g", s.a, s.b, s.c, s.d);
  return buf;
}

ShapeSpec default_init_shape(int width, int height) {
  return ShapeSpec::rect(0.2 * width, 0.2 * height, 0.8 * width, 0.8 * height);
}

double shape_sdf(const ShapeSpec& s, double x, double y) {
  if (s.kind == ShapeSpec::Kind::kCircle) {
    const double dx = x - s.a, dy = y - s.b;
    return std::sqrt(dx * dx + dy * dy) - s.c;
  }
  // Rectangle: outside, distance to the box; inside, minus the distance to
  // the nearest side.
  const double dx = std::max(s.a - x, x - s.c);
  const double dy = std::max(s.b - y, y - s.d);
  if (dx > 0.0 || dy > 0.0) {
    const double ox = std::max(dx, 0.0), oy = std::max(dy, 0.0);
    return std::sqrt(ox * ox + oy * oy);
  }
  return std::max(dx, dy);
}

namespace {

bool intersects_grid(const ShapeSpec& s, int w, int h) {
  // Distance from the grid rectangle [0,w-1]x[0,h-1] to the shape: the
  // shape intersects the grid iff its sdf is negative somewhere on it,
  // which for these convex shapes reduces to checking the nearest point.
  if (s.kind == ShapeSpec::Kind::kCircle) {
    const double nx = std::clamp(s.a, 0.0, static_cast<double>(w - 1));
    const double ny = std::clamp(s.b, 0.0, static_cast<double>(h - 1));
    return shape_sdf(s, nx, ny) < 0.0;
  }
  return s.a < w - 1 && s.c > 0.0 && s.b < h - 1 && s.d > 0.0;
}

}  // namespace

LevelSetField init_levelset(const std::vector<ShapeSpec>& shapes, int width, int height,
                            InitMode mode, double c0) {
  if (width < 1 || height < 1) throw SpecError("init_levelset: empty grid");
  if (shapes.empty()) throw SpecError("init_levelset: need at least one shape");
  if (!(c0 > 0.0)) throw SpecError("init_levelset: c0 must be positive");
  for (const ShapeSpec& s : shapes)
    if (!intersects_grid(s, width, height))
      throw SpecError("init shape " + shape_spec_to_string(s) + " lies outside the grid");

  LevelSetField phi(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double v = shape_sdf(shapes[0], x, y);
      for (size_t i = 1; i < shapes.size(); ++i)
        v = std::min(v, shape_sdf(shapes[i], x, y));
      phi.at(x, y) = mode == InitMode::kSdf ? v : (v < 0.0 ? -c0 : c0);
    }
  }
  return phi;
}

}  // namespace levelseg
