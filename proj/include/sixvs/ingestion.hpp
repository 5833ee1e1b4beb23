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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sixvs/config.hpp"
#include "sixvs/schema.hpp"
#include "sixvs/series.hpp"

namespace sixvs {

/// A cell that failed to parse under its feature's declared format. `row` is
/// the 0-based data row in file order (the header is not counted).
struct FormatViolation {
  std::size_t row = 0;
  std::string cell;
  StorageFormat expected = StorageFormat::floating;
  friend bool operator==(const FormatViolation&, const FormatViolation&) = default;
};

struct SchemaViolation {
  std::string feature;
  std::size_t row = 0;
  std::string cell;
  StorageFormat expected = StorageFormat::floating;
  friend bool operator==(const SchemaViolation&, const SchemaViolation&) = default;
};

/// A row dropped at load because its timestamp could not be parsed.
struct RejectedRow {
  std::size_t row = 0;
  std::string timestamp;
};

struct Feature {
  FeatureSchema schema;
  TimedSeries series;
  std::vector<FormatViolation> violations;
};

/// All features share one timestamp index; each series has one entry per
/// loaded row (rows sorted by time, equal timestamps kept in file order).
struct Dataset {
  std::string name;
  std::vector<Feature> features;
  /// Distinct row timestamps.
  std::size_t ni = 0;
  std::vector<RejectedRow> rejected_rows;
  std::size_t short_rows = 0;

  std::size_t nf() const noexcept { return features.size(); }
  const Feature* find(std::string_view feature) const noexcept;
};

/// Parsed cell text under `format`; nullopt when the text does not conform.
/// Categorical tokens are returned through `token` in canonical form.
std::optional<double> parse_cell(std::string_view text, StorageFormat format);
std::optional<std::string> canonical_token(std::string_view text, StorageFormat format);

/// Empty cell, NA, NaN, null (case-insensitive) or one of `extra`.
bool is_missing_token(std::string_view text, std::span<const std::string> extra = {});

Dataset load_dataset(std::istream& source, std::span<const FeatureSchema> schema, const ProfilerConfig& config,
                     std::string name = "dataset");

/// Throws IoError when `path` cannot be read.
Dataset load_dataset_file(const std::string& path, std::span<const FeatureSchema> schema,
                          const ProfilerConfig& config);

/// Builds a dataset from in-memory series (tests, aligned copies). Series are
/// used as given; ni counts distinct timestamps across all of them.
Dataset make_dataset(std::string name, std::vector<Feature> features);

/// Every recorded format violation of the schema's features, schema order then
/// row order. A schema feature absent from the dataset yields one entry with
/// row = FormatViolationError::kNoRow.
std::vector<SchemaViolation> validate_schema(const Dataset& ds, std::span<const FeatureSchema> schema);

}  // namespace sixvs
