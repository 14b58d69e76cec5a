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

#ifndef LEVELSEG_RASTER_HPP_
#define LEVELSEG_RASTER_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "levelseg/field.hpp"

namespace levelseg {

// Integer raster as stored in a PGM/PPM file. Samples are row-major,
// channel-interleaved, each in [0, maxval], maxval <= 65535.
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 = gray, 3 = rgb
  int maxval = 255;
  std::vector<uint16_t> samples;
};

// Accepts P2/P5 (PGM) and P3/P6 (PPM). Binary payloads with maxval > 255
// are two bytes per sample, big endian. Malformed headers raise ParseError
// naming the byte offset; short payloads raise a distinct truncation
// ParseError; other magic numbers ("P7", ...) are rejected up front.
RasterImage decode_pnm(const std::string& bytes);
RasterImage load_pnm(const std::filesystem::path& path);

// Always emits the binary form (P5 for gray, P6 for rgb); decode(encode(x))
// round-trips exactly. write_pnm goes through a temp file + rename.
std::string encode_pnm(const RasterImage& img);
void write_pnm(const RasterImage& img, const std::filesystem::path& path);

// Gray output: luminance 0.299 R + 0.587 G + 0.114 B, divided by maxval,
// so every value lands in [0,1]. Single-channel input just rescales.
ScalarField2D to_grayscale_normalized(const RasterImage& img);

// Caps the longer side at max_dim with bilinear resampling, preserving
// aspect ratio. Images already small enough come back unchanged.
ScalarField2D rescale_max_dim(const ScalarField2D& f, int max_dim);

inline constexpr int kDefaultMaxDim = 256;

enum class SynthKind { kDisk, kTwoRegion, kRamp, kChecker };

// Throws SpecError for anything but "disk", "tworegion", "ramp", "checker".
SynthKind parse_synth_kind(const std::string& name);
std::string synth_kind_name(SynthKind kind);

// Recipe for a synthetic test image. Negative geometry fields mean "pick
// the default for this grid" (centered disk of radius min(w,h)/4, split at
// the midline). kRamp draws the disk on a background with an illumination
// gradient: slope * x / (width - 1) is added to every pixel.
struct SynthSpec {
  SynthKind kind = SynthKind::kDisk;
  int width = 128;
  int height = 128;
  double foreground = 0.8;
  double background = 0.2;
  double noise_sigma = 0.0;  // additive Gaussian, clamped to [0,1] after
  uint64_t seed = 0;
  double cx = -1.0, cy = -1.0, radius = -1.0;  // disk / ramp
  int split = -1;                              // tworegion: first foreground column
  double slope = 0.3;                          // ramp
  int cell = 8;                                // checker cell size in pixels
};

// Deterministic for a given spec: noise comes from splitmix64 streams fed
// through Box-Muller, never from global state. Values clamped to [0,1].
ScalarField2D synth(const SynthSpec& spec);

// Foreground indicator for the same spec: 255 inside, 0 outside, no noise.
RasterImage truth_mask(const SynthSpec& spec);

// Identifier for the noise generator, recorded in run manifests.
inline constexpr const char* kNoiseRngId = "splitmix64/box-muller";

// Quantizes a [0,1] field to an 8-bit grayscale raster.
RasterImage to_raster_gray8(const ScalarField2D& f);

}  // namespace levelseg

#endif  // LEVELSEG_RASTER_HPP_
