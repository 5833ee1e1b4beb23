// Copyright 2026 The sixvs Authors.
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

#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace sixvs {

/// Declared schema does not match the input (missing timestamp column,
/// unknown feature, duplicate names, empty file).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid profiler configuration (weights, thresholds, durations).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path)
      : std::runtime_error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A cell did not conform to its declared storage format.
class FormatViolationError : public std::runtime_error {
 public:
  static constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();

  explicit FormatViolationError(const std::string& what, std::size_t row = kNoRow)
      : std::runtime_error(row == kNoRow ? what : what + " (row " + std::to_string(row) + ")"),
        row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Seasonal decomposition cannot run on the given series.
class DecompositionUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sixvs
