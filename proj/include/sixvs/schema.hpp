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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sixvs {

enum class FeatureKind { continuous, categorical };
enum class StorageFormat { integer, floating, boolean, timestamp, category_text };
enum class DataForm { structured, semi_structured, unstructured };

std::string_view to_string(FeatureKind k);
std::string_view to_string(StorageFormat f);
std::string_view to_string(DataForm f);

FeatureKind feature_kind_from_string(std::string_view s);
StorageFormat storage_format_from_string(std::string_view s);
DataForm data_form_from_string(std::string_view s);

struct FeatureSchema {
  std::string name;
  FeatureKind kind = FeatureKind::continuous;
  StorageFormat expected_format = StorageFormat::floating;
  DataForm expected_form = DataForm::structured;

  bool numeric() const noexcept {
    return expected_format == StorageFormat::integer || expected_format == StorageFormat::floating;
  }
  friend bool operator==(const FeatureSchema&, const FeatureSchema&) = default;
};

/// Throws SchemaError on duplicate names, empty names, or a continuous
/// feature with a non-numeric storage format.
void check_schema(std::span<const FeatureSchema> schema);

/// Accepts either `{"features": [...]}` or a bare array of feature objects.
std::vector<FeatureSchema> schema_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const FeatureSchema& f);

}  // namespace sixvs
