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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sixvs/config.hpp"
#include "sixvs/pipeline.hpp"

namespace sixvs {

enum class Dimension { volume, variety, velocity, veracity, value, variability };
enum class Severity { info, warn, critical };
enum class RuleScope { dataset, feature };

std::string_view to_string(Dimension d);
std::string_view to_string(Severity s);
std::string_view to_string(RuleScope s);
Dimension dimension_from_string(std::string_view s);
Severity severity_from_string(std::string_view s);

/// One row of the rule table. `condition` names a predicate over the profile;
/// `trigger` and `action` may reference the values it exposes as {name}.
struct Rule {
  std::string id;
  Dimension dimension = Dimension::veracity;
  RuleScope scope = RuleScope::feature;
  std::string condition;
  std::optional<double> threshold;
  Severity severity = Severity::info;
  std::string trigger;
  std::string action;
};

struct RuleTable {
  int version = 0;
  std::vector<Rule> rules;
};

/// Throws ConfigError for unknown conditions or malformed entries.
RuleTable rules_from_json(const nlohmann::json& doc);

/// The table shipped in data/recommendation_rules.json.
const RuleTable& default_rules();

struct Recommendation {
  std::string rule;
  Dimension dimension = Dimension::veracity;
  /// Empty for dataset-scope rules.
  std::string feature;
  Severity severity = Severity::info;
  std::string trigger;
  std::string action;
  friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

/// Rules in table order; feature rules in schema order within each rule.
std::vector<Recommendation> recommend(const DatasetProfile& profile, const RuleTable& rules = default_rules());

/// Re-evaluates the condition behind `rec` against `profile`.
bool trigger_holds(const Recommendation& rec, const DatasetProfile& profile, const RuleTable& rules = default_rules());

}  // namespace sixvs
