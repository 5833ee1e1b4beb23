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

#include "sixvs/schema.hpp"

#include <set>

#include "sixvs/errors.hpp"

namespace sixvs {

std::string_view to_string(FeatureKind k) {
  return k == FeatureKind::continuous ? "continuous" : "categorical";
}

std::string_view to_string(StorageFormat f) {
  switch (f) {
    case StorageFormat::integer: return "integer";
    case StorageFormat::floating: return "float";
    case StorageFormat::boolean: return "boolean";
    case StorageFormat::timestamp: return "timestamp";
    case StorageFormat::category_text: return "category-text";
  }
  return "float";
}

std::string_view to_string(DataForm f) {
  switch (f) {
    case DataForm::structured: return "structured";
    case DataForm::semi_structured: return "semi-structured";
    case DataForm::unstructured: return "unstructured";
  }
  return "structured";
}

FeatureKind feature_kind_from_string(std::string_view s) {
  if (s == "continuous") return FeatureKind::continuous;
  if (s == "categorical") return FeatureKind::categorical;
  throw SchemaError("unknown feature kind '" + std::string(s) + "'");
}

StorageFormat storage_format_from_string(std::string_view s) {
  if (s == "integer") return StorageFormat::integer;
  if (s == "float") return StorageFormat::floating;
  if (s == "boolean") return StorageFormat::boolean;
  if (s == "timestamp") return StorageFormat::timestamp;
  if (s == "category-text") return StorageFormat::category_text;
  throw SchemaError("unknown storage format '" + std::string(s) + "'");
}

DataForm data_form_from_string(std::string_view s) {
  if (s == "structured") return DataForm::structured;
  if (s == "semi-structured") return DataForm::semi_structured;
  if (s == "unstructured") return DataForm::unstructured;
  throw SchemaError("unknown data form '" + std::string(s) + "'");
}

void check_schema(std::span<const FeatureSchema> schema) {
  std::set<std::string_view> seen;
  for (const auto& f : schema) {
    if (f.name.empty()) throw SchemaError("feature with empty name");
    if (!seen.insert(f.name).second) throw SchemaError("duplicate feature name '" + f.name + "'");
    if (f.kind == FeatureKind::continuous && !f.numeric())
      throw SchemaError("continuous feature '" + f.name + "' must use integer or float format, got " +
                        std::string(to_string(f.expected_format)));
  }
}

std::vector<FeatureSchema> schema_from_json(const nlohmann::json& doc) {
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("features")) throw SchemaError("schema document has no 'features' array");
    list = &doc.at("features");
  }
  if (!list->is_array()) throw SchemaError("schema 'features' must be an array");

  std::vector<FeatureSchema> out;
  for (const auto& item : *list) {
    if (!item.is_object() || !item.contains("name") || !item.at("name").is_string())
      throw SchemaError("schema feature entries need a string 'name'");
    FeatureSchema f;
    f.name = item.at("name").get<std::string>();
    try {
      if (item.contains("kind")) f.kind = feature_kind_from_string(item.at("kind").get<std::string>());
      if (item.contains("expected_format"))
        f.expected_format = storage_format_from_string(item.at("expected_format").get<std::string>());
      else if (f.kind == FeatureKind::categorical)
        f.expected_format = StorageFormat::category_text;
      if (item.contains("expected_form"))
        f.expected_form = data_form_from_string(item.at("expected_form").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError("feature '" + f.name + "': " + e.what());
    }
    for (const auto& [key, _] : item.items()) {
      if (key != "name" && key != "kind" && key != "expected_format" && key != "expected_form")
        throw SchemaError("feature '" + f.name + "': unknown field '" + key + "'");
    }
    out.push_back(std::move(f));
  }
  check_schema(out);
  return out;
}

nlohmann::json to_json(const FeatureSchema& f) {
  return {{"name", f.name},
          {"kind", to_string(f.kind)},
          {"expected_format", to_string(f.expected_format)},
          {"expected_form", to_string(f.expected_form)}};
}

}  // namespace sixvs
