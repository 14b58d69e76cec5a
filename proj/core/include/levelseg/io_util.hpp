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

#ifndef LEVELSEG_IO_UTIL_HPP_
#define LEVELSEG_IO_UTIL_HPP_

#include <filesystem>
#include <string>

namespace levelseg {

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temp file, then renames over the target, so readers
// never observe a half-written file.
void atomic_write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace levelseg

#endif  // LEVELSEG_IO_UTIL_HPP_
