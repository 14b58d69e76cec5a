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

#include "levelseg/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "levelseg/errors.hpp"
#include "levelseg/io_util.hpp"

namespace levelseg {

namespace {

[[noreturn]] void parse_fail(size_t offset, const std::string& what) {
  throw ParseError("pnm parse error at byte " + std::to_string(offset) + ": " + what);
}

struct TokenReader {
  const std::string& buf;
  size_t pos = 0;

  bool eof() const { return pos >= buf.size(); }

  void skip_space_and_comments() {
    while (pos < buf.size()) {
      const char c = buf[pos];
      if (c == '#') {
        while (pos < buf.size() && buf[pos] != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
        ++pos;
      } else {
        break;
      }
    }
  }

  long read_int(const char* what) {
    skip_space_and_comments();
    if (eof()) parse_fail(pos, std::string("unexpected end of data, expected ") + what);
    if (buf[pos] < '0' || buf[pos] > '9')
      parse_fail(pos, std::string("expected ") + what + " (a decimal integer)");
    long v = 0;
    while (pos < buf.size() && buf[pos] >= '0' && buf[pos] <= '9') {
      v = v * 10 + (buf[pos] - '0');
      if (v > 1'000'000'000L) parse_fail(pos, std::string(what) + " out of range");
      ++pos;
    }
    return v;
  }
};

}  // namespace

RasterImage decode_pnm(const std::string& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P')
    parse_fail(0, "not a PNM file (missing 'P' magic)");
  const char kind = bytes[1];
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6')
    throw ParseError(std::string("unsupported PNM magic 'P") + kind +
                     "': only P2/P5 (PGM) and P3/P6 (PPM) are handled");
  const bool ascii = (kind == '2' || kind == '3');
  const int channels = (kind == '3' || kind == '6') ? 3 : 1;

  TokenReader r{bytes, 2};
  RasterImage img;
  img.channels = channels;
  img.width = static_cast<int>(r.read_int("width"));
  img.height = static_cast<int>(r.read_int("height"));
  if (img.width <= 0 || img.height <= 0) parse_fail(r.pos, "image dimensions must be positive");
  img.maxval = static_cast<int>(r.read_int("maxval"));
  if (img.maxval < 1 || img.maxval > 65535) parse_fail(r.pos, "maxval must be in [1, 65535]");

  const size_t n = static_cast<size_t>(img.width) * img.height * channels;
  img.samples.resize(n);

  if (ascii) {
    for (size_t i = 0; i < n; ++i) {
      r.skip_space_and_comments();
      if (r.eof())
        throw ParseError("pnm payload truncated: expected " + std::to_string(n) +
                         " ascii samples, got " + std::to_string(i));
      const size_t at = r.pos;
      const long v = r.read_int("sample");
      if (v > img.maxval) parse_fail(at, "sample exceeds maxval");
      img.samples[i] = static_cast<uint16_t>(v);
    }
    return img;
  }

  // Binary: exactly one whitespace byte separates the header from the raster.
  if (r.eof()) parse_fail(r.pos, "missing raster data");
  const char sep = bytes[r.pos];
  if (sep != '\n' && sep != ' ' && sep != '\t' && sep != '\r')
    parse_fail(r.pos, "expected single whitespace byte before raster data");
  size_t p = r.pos + 1;

  const int wide = img.maxval > 255 ? 2 : 1;
  const size_t need = n * wide;
  if (bytes.size() - p < need)
    throw ParseError("pnm payload truncated: expected " + std::to_string(need) +
                     " raster bytes, got " + std::to_string(bytes.size() - p));
  for (size_t i = 0; i < n; ++i) {
    uint32_t v;
    if (wide == 2) {
      // Big endian, most significant byte first.
      v = (static_cast<uint8_t>(bytes[p]) << 8) | static_cast<uint8_t>(bytes[p + 1]);
      p += 2;
    } else {
      v = static_cast<uint8_t>(bytes[p]);
      p += 1;
    }
    if (v > static_cast<uint32_t>(img.maxval)) parse_fail(p - wide, "sample exceeds maxval");
    img.samples[i] = static_cast<uint16_t>(v);
  }
  return img;
}

RasterImage load_pnm(const std::filesystem::path& path) { return decode_pnm(read_file(path)); }

std::string encode_pnm(const RasterImage& img) {
  if (img.channels != 1 && img.channels != 3)
    throw SpecError("encode_pnm: channels must be 1 or 3");
  if (img.width <= 0 || img.height <= 0) throw SpecError("encode_pnm: empty image");
  if (img.maxval < 1 || img.maxval > 65535) throw SpecError("encode_pnm: bad maxval");
  const size_t n = static_cast<size_t>(img.width) * img.height * img.channels;
  if (img.samples.size() != n) throw SpecError("encode_pnm: sample count does not match header");

  std::string out = img.channels == 1 ? "P5\n" : "P6\n";
  out += std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
  out += std::to_string(img.maxval) + "\n";
  const int wide = img.maxval > 255 ? 2 : 1;
  out.reserve(out.size() + n * wide);
  for (size_t i = 0; i < n; ++i) {
    const uint16_t v = img.samples[i];
    if (v > img.maxval) throw SpecError("encode_pnm: sample exceeds maxval");
    if (wide == 2) out += static_cast<char>(v >> 8);
    out += static_cast<char>(v & 0xff);
  }
  return out;
}

void write_pnm(const RasterImage& img, const std::filesystem::path& path) {
  atomic_write_file(path, encode_pnm(img));
}

ScalarField2D to_grayscale_normalized(const RasterImage& img) {
  if (img.channels != 1 && img.channels != 3)
    throw SpecError("to_grayscale_normalized: channels must be 1 or 3");
  if (img.maxval < 1) throw SpecError("to_grayscale_normalized: bad maxval");
  ScalarField2D f(img.width, img.height);
  const double inv = 1.0 / img.maxval;
  if (img.channels == 1) {
    for (size_t i = 0; i < f.size(); ++i) f[i] = img.samples[i] * inv;
  } else {
    for (size_t i = 0; i < f.size(); ++i) {
      const double r = img.samples[3 * i + 0];
      const double g = img.samples[3 * i + 1];
      const double b = img.samples[3 * i + 2];
      f[i] = (0.299 * r + 0.587 * g + 0.114 * b) * inv;
    }
  }
  return f;
}

ScalarField2D rescale_max_dim(const ScalarField2D& f, int max_dim) {
  if (max_dim < 1) throw SpecError("rescale_max_dim: max_dim must be >= 1");
  const int w = f.width(), h = f.height();
  if (std::max(w, h) <= max_dim) return f;

  int nw, nh;
  if (w >= h) {
    nw = max_dim;
    nh = std::max(1, static_cast<int>(std::lround(static_cast<double>(h) * max_dim / w)));
  } else {
    nh = max_dim;
    nw = std::max(1, static_cast<int>(std::lround(static_cast<double>(w) * max_dim / h)));
  }

  ScalarField2D out(nw, nh);
  const double sx = static_cast<double>(w) / nw;
  const double sy = static_cast<double>(h) / nh;
  for (int y = 0; y < nh; ++y) {
    // Pixel-center mapping: dst center (y + 0.5) lands at src (y + 0.5) * sy.
    const double fy = (y + 0.5) * sy - 0.5;
    const int y0 = static_cast<int>(std::floor(fy));
    const double ty = fy - y0;
    for (int x = 0; x < nw; ++x) {
      const double fx = (x + 0.5) * sx - 0.5;
      const int x0 = static_cast<int>(std::floor(fx));
      const double tx = fx - x0;
      const double a = f.at_clamped(x0, y0), b = f.at_clamped(x0 + 1, y0);
      const double c = f.at_clamped(x0, y0 + 1), d = f.at_clamped(x0 + 1, y0 + 1);
      out.at(x, y) = (1.0 - ty) * ((1.0 - tx) * a + tx * b) + ty * ((1.0 - tx) * c + tx * d);
    }
  }
  return out;
}

SynthKind parse_synth_kind(const std::string& name) {
  if (name == "disk") return SynthKind::kDisk;
  if (name == "tworegion") return SynthKind::kTwoRegion;
  if (name == "ramp") return SynthKind::kRamp;
  if (name == "checker") return SynthKind::kChecker;
  throw SpecError("unknown synth kind '" + name + "' (expected disk, tworegion, ramp, checker)");
}

std::string synth_kind_name(SynthKind kind) {
  switch (kind) {
    case SynthKind::kDisk: return "disk";
    case SynthKind::kTwoRegion: return "tworegion";
    case SynthKind::kRamp: return "ramp";
    case SynthKind::kChecker: return "checker";
  }
  return "?";
}

namespace {

// splitmix64: tiny, splittable, identical output on every platform.
struct SplitMix64 {
  uint64_t state;
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in (0, 1], safe to feed into log().
  double uniform_pos() { return ((next() >> 11) + 1) * (1.0 / 9007199254740992.0); }
};

// Box-Muller on top of splitmix64; draws come in pairs.
struct GaussianStream {
  SplitMix64 rng;
  bool have_spare = false;
  double spare = 0.0;
  double next() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    const double u1 = rng.uniform_pos();
    const double u2 = rng.uniform_pos();
    const double m = std::sqrt(-2.0 * std::log(u1));
    spare = m * std::sin(2.0 * M_PI * u2);
    have_spare = true;
    return m * std::cos(2.0 * M_PI * u2);
  }
};

struct ResolvedGeometry {
  double cx, cy, radius;
  int split;
};

ResolvedGeometry resolve_geometry(const SynthSpec& s) {
  ResolvedGeometry g;
  g.cx = s.cx >= 0.0 ? s.cx : s.width / 2.0;
  g.cy = s.cy >= 0.0 ? s.cy : s.height / 2.0;
  g.radius = s.radius >= 0.0 ? s.radius : std::min(s.width, s.height) / 4.0;
  g.split = s.split >= 0 ? s.split : s.width / 2;
  return g;
}

void validate(const SynthSpec& s) {
  if (s.width < 8 || s.height < 8) throw SpecError("synth: size must be at least 8x8");
  if (s.foreground < 0.0 || s.foreground > 1.0 || s.background < 0.0 || s.background > 1.0)
    throw SpecError("synth: foreground/background must be in [0,1]");
  if (s.noise_sigma < 0.0) throw SpecError("synth: noise sigma must be >= 0");
  if (s.kind == SynthKind::kChecker && s.cell < 1) throw SpecError("synth: cell must be >= 1");
  const ResolvedGeometry g = resolve_geometry(s);
  if (s.kind == SynthKind::kTwoRegion && (g.split < 1 || g.split >= s.width))
    throw SpecError("synth: split column must leave two non-empty regions");
  if ((s.kind == SynthKind::kDisk || s.kind == SynthKind::kRamp) && g.radius <= 0.0)
    throw SpecError("synth: disk radius must be positive");
}

bool is_foreground(const SynthSpec& s, const ResolvedGeometry& g, int x, int y) {
  switch (s.kind) {
    case SynthKind::kDisk:
    case SynthKind::kRamp: {
      const double dx = x - g.cx, dy = y - g.cy;
      return dx * dx + dy * dy <= g.radius * g.radius;
    }
    case SynthKind::kTwoRegion:
      return x >= g.split;
    case SynthKind::kChecker:
      return ((x / s.cell) + (y / s.cell)) % 2 == 0;
  }
  return false;
}

}  // namespace

ScalarField2D synth(const SynthSpec& spec) {
  validate(spec);
  const ResolvedGeometry g = resolve_geometry(spec);
  ScalarField2D f(spec.width, spec.height);
  GaussianStream noise{SplitMix64{spec.seed}};
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      double v = is_foreground(spec, g, x, y) ? spec.foreground : spec.background;
      if (spec.kind == SynthKind::kRamp)
        v += spec.slope * static_cast<double>(x) / (spec.width - 1);
      if (spec.noise_sigma > 0.0) v += spec.noise_sigma * noise.next();
      f.at(x, y) = std::clamp(v, 0.0, 1.0);
    }
  }
  return f;
}

RasterImage truth_mask(const SynthSpec& spec) {
  validate(spec);
  const ResolvedGeometry g = resolve_geometry(spec);
  RasterImage img;
  img.width = spec.width;
  img.height = spec.height;
  img.channels = 1;
  img.maxval = 255;
  img.samples.resize(static_cast<size_t>(spec.width) * spec.height);
  size_t i = 0;
  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x, ++i)
      img.samples[i] = is_foreground(spec, g, x, y) ? 255 : 0;
  return img;
}

RasterImage to_raster_gray8(const ScalarField2D& f) {
  RasterImage img;
  img.width = f.width();
  img.height = f.height();
  img.channels = 1;
  img.maxval = 255;
  img.samples.resize(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    img.samples[i] = static_cast<uint16_t>(std::lround(std::clamp(f[i], 0.0, 1.0) * 255.0));
  return img;
}

}  // namespace levelseg
