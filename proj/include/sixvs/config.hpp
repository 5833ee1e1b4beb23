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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sixvs/time.hpp"

namespace sixvs {

enum class QuantileMethod { linear, lower, higher, nearest, midpoint };
enum class MergePolicy { first, mean, median };
enum class CorrelationMode { signed_max, absolute_max };

std::string_view to_string(QuantileMethod m);
std::string_view to_string(MergePolicy p);
std::string_view to_string(CorrelationMode m);
QuantileMethod quantile_method_from_string(std::string_view s);
MergePolicy merge_policy_from_string(std::string_view s);
CorrelationMode correlation_mode_from_string(std::string_view s);

struct ValueBounds {
  double min = 0.0;
  double max = 0.0;
  bool contains(double v) const noexcept { return v >= min && v <= max; }
  friend bool operator==(const ValueBounds&, const ValueBounds&) = default;
};

struct ProfilerConfig {
  // Timing.
  Duration expected_interval{0};
  Duration interval_tolerance{0};
  Duration sms_max = std::chrono::minutes{30};
  Duration mms_max = std::chrono::hours{6};

  // Value analysis.
  double outlier_coefficient = 1.5;
  QuantileMethod quantile_method = QuantileMethod::linear;
  double spike_k = 6.0;
  std::map<std::string, ValueBounds> spike_bounds;
  /// System limits per feature; outliers beyond them are "confirmed".
  std::map<std::string, ValueBounds> physical_bounds;
  std::size_t max_acf_lag = 60;
  /// Empty means one day's worth of samples at expected_interval.
  std::vector<std::size_t> seasonal_periods;
  double seasonal_tolerance = 0.05;

  // Cross-feature analysis.
  double correlation_threshold = 0.7;
  Duration max_cross_delay = std::chrono::seconds{300};
  CorrelationMode correlation_mode = CorrelationMode::signed_max;

  // Scoring.
  std::array<double, 4> veracity_weights{0.25, 0.25, 0.25, 0.25};
  std::array<double, 3> variability_weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

  // Duplicate handling and grid.
  MergePolicy duplicate_policy = MergePolicy::median;
  MergePolicy grid_conflict_policy = MergePolicy::median;
  std::optional<Instant> grid_start;
  std::optional<Instant> grid_end;

  // Ingestion.
  std::string timestamp_column = "timestamp";
  TimestampSpec timestamp_format;
  char delimiter = ',';
  std::vector<std::string> missing_tokens;

  // Recommendation thresholds.
  std::optional<Duration> required_interval;
  std::optional<unsigned long long> volume_threshold;

  /// Seasonal candidate periods actually used (resolves the empty default).
  std::vector<std::size_t> effective_seasonal_periods() const;

  /// Throws ConfigError when an invariant does not hold.
  void validate() const;
};

/// Reads every field by its exact name; durations are in seconds. Unknown
/// keys are rejected so typos surface as configuration errors.
ProfilerConfig config_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ProfilerConfig& c);

}  // namespace sixvs
