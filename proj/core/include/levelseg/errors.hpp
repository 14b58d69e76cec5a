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

#ifndef LEVELSEG_ERRORS_HPP_
#define LEVELSEG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace levelseg {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-supplied configuration: out-of-range parameter, malformed
// shape spec, unknown algorithm name, image too small, ...
class SpecError : public Error {
 public:
  using Error::Error;
};

// Malformed input data (PNM headers, manifests). Messages carry enough
// position info to locate the defect.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level trouble: missing file, short read, failed write.
class IoError : public Error {
 public:
  using Error::Error;
};

// The evolution produced a non-finite field.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace levelseg

#endif  // LEVELSEG_ERRORS_HPP_
