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

#ifndef LEVELSEG_INIT_CONTOUR_HPP_
#define LEVELSEG_INIT_CONTOUR_HPP_

#include <string>
#include <vector>

#include "levelseg/field.hpp"

namespace levelseg {

// Seed shape for the initial level set. Interior is inside the shape.
struct ShapeSpec {
  enum class Kind { kCircle, kRect } kind = Kind::kCircle;
  // circle: cx, cy, r        rect: x0, y0, x1, y1 (corners, x0<x1, y0<y1)
  double a = 0, b = 0, c = 0, d = 0;

  static ShapeSpec circle(double cx, double cy, double r);
  static ShapeSpec rect(double x0, double y0, double x1, double y1);
};

// Accepts the command-line syntax "circle:cx,cy,r" / "rect:x0,y0,x1,y1".
ShapeSpec parse_shape_spec(const std::string& text);
std::string shape_spec_to_string(const ShapeSpec& s);

enum class InitMode {
  kSdf,         // exact signed distance to the union boundary, negative inside
  kBinaryStep,  // -c0 inside, +c0 outside
};

inline constexpr double kBinaryStepHeight = 2.0;

// Centered rectangle covering the middle 60% of the grid; the fallback when
// no shapes are given.
ShapeSpec default_init_shape(int width, int height);

// Exact signed distance of one shape at (x, y), negative inside.
double shape_sdf(const ShapeSpec& s, double x, double y);

// Builds phi over a width x height grid; union of shapes is the pointwise
// minimum of their signed distances. Every shape must intersect the grid.
LevelSetField init_levelset(const std::vector<ShapeSpec>& shapes, int width, int height,
                            InitMode mode, double c0 = kBinaryStepHeight);

}  // namespace levelseg

#endif  // LEVELSEG_INIT_CONTOUR_HPP_
