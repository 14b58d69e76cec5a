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

#ifndef LEVELSEG_CONTOUR_HPP_
#define LEVELSEG_CONTOUR_HPP_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "levelseg/field.hpp"
#include "levelseg/raster.hpp"

namespace levelseg {

// Polyline along the zero crossing, sub-pixel vertices in image
// coordinates. Closed contours do not repeat the first vertex; the closing
// segment is implicit. Consecutive vertices always sit in one grid cell,
// so they are at most sqrt(2) apart.
struct Contour {
  std::vector<std::pair<double, double>> vertices;
  bool closed = false;
};

// Marching squares with linear interpolation along cell edges. Exact zeros
// are nudged to +1e-12 so every pixel has a definite sign; saddle cells are
// disambiguated by the sign of the cell-center average. Open contours only
// terminate on the image border.
std::vector<Contour> extract_zero_set(const LevelSetField& phi);

// Polyline length, including the closing segment of closed contours.
double contour_length(const Contour& c);

inline constexpr double kDefaultMinContourLen = 30.0;

// Keeps contours with length >= min_len, preserving order. Idempotent.
std::vector<Contour> filter_by_length(std::vector<Contour> contours, double min_len);

// Grayscale [0,1] background promoted to 8-bit RGB with the contours drawn
// in pure red via Bresenham segments between rounded vertices.
RasterImage render_overlay(const ScalarField2D& image, const std::vector<Contour>& contours);

// "contour_id,vertex_index,x,y" rows, fixed 6-decimal coordinates.
std::string contours_to_csv(const std::vector<Contour>& contours);

// One polygon (closed) or polyline (open) element per contour inside an
// image-sized viewBox. No contours yields an empty group.
std::string contours_to_svg(const std::vector<Contour>& contours, int width, int height);

void export_contours_csv(const std::vector<Contour>& contours,
                         const std::filesystem::path& path);
void export_contours_svg(const std::vector<Contour>& contours, int width, int height,
                         const std::filesystem::path& path);

}  // namespace levelseg

#endif  // LEVELSEG_CONTOUR_HPP_
