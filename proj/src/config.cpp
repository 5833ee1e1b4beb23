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

#include "sixvs/config.hpp"

#include <cmath>
#include <set>

#include "sixvs/errors.hpp"

namespace sixvs {
namespace {

using nlohmann::json;

double number(const json& v, const char* key) {
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

Duration duration_field(const json& v, const char* key) {
  const double s = number(v, key);
  if (!std::isfinite(s)) throw ConfigError(std::string("'") + key + "' must be finite");
  return seconds(s);
}

std::size_t count_field(const json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::map<std::string, ValueBounds> bounds_map(const json& v, const char* key) {
  if (!v.is_object()) throw ConfigError(std::string("'") + key + "' must map feature names to bounds");
  std::map<std::string, ValueBounds> out;
  for (const auto& [name, b] : v.items()) {
    ValueBounds vb;
    if (b.is_array() && b.size() == 2) {
      vb.min = number(b[0], key);
      vb.max = number(b[1], key);
    } else if (b.is_object() && b.contains("min") && b.contains("max")) {
      vb.min = number(b.at("min"), key);
      vb.max = number(b.at("max"), key);
    } else {
      throw ConfigError(std::string("'") + key + "." + name + "' must be [min, max]");
    }
    if (!(vb.min <= vb.max)) throw ConfigError(std::string("'") + key + "." + name + "' has min > max");
    out.emplace(name, vb);
  }
  return out;
}

Instant instant_field(const json& v, const char* key) {
  if (v.is_string()) {
    auto t = try_parse_timestamp(v.get<std::string>(), TimestampSpec{});
    if (!t) throw ConfigError(std::string("'") + key + "' is not an ISO-8601 timestamp");
    return *t;
  }
  return Instant{duration_field(v, key)};
}

template <std::size_t N>
std::array<double, N> weights_field(const json& v, const char* key) {
  if (!v.is_array() || v.size() != N)
    throw ConfigError(std::string("'") + key + "' must hold " + std::to_string(N) + " numbers");
  std::array<double, N> w{};
  for (std::size_t i = 0; i < N; ++i) w[i] = number(v[i], key);
  return w;
}

json bounds_json(const std::map<std::string, ValueBounds>& m) {
  json out = json::object();
  for (const auto& [name, b] : m) out[name] = json::array({b.min, b.max});
  return out;
}

}  // namespace

std::string_view to_string(QuantileMethod m) {
  switch (m) {
    case QuantileMethod::linear: return "linear";
    case QuantileMethod::lower: return "lower";
    case QuantileMethod::higher: return "higher";
    case QuantileMethod::nearest: return "nearest";
    case QuantileMethod::midpoint: return "midpoint";
  }
  return "linear";
}

std::string_view to_string(MergePolicy p) {
  switch (p) {
    case MergePolicy::first: return "first";
    case MergePolicy::mean: return "mean";
    case MergePolicy::median: return "median";
  }
  return "median";
}

std::string_view to_string(CorrelationMode m) {
  return m == CorrelationMode::signed_max ? "signed" : "absolute";
}

QuantileMethod quantile_method_from_string(std::string_view s) {
  if (s == "linear" || s == "linear-interpolation") return QuantileMethod::linear;
  if (s == "lower") return QuantileMethod::lower;
  if (s == "higher") return QuantileMethod::higher;
  if (s == "nearest") return QuantileMethod::nearest;
  if (s == "midpoint") return QuantileMethod::midpoint;
  throw ConfigError("unknown quantile method '" + std::string(s) + "'");
}

MergePolicy merge_policy_from_string(std::string_view s) {
  if (s == "first") return MergePolicy::first;
  if (s == "mean") return MergePolicy::mean;
  if (s == "median") return MergePolicy::median;
  throw ConfigError("unknown merge policy '" + std::string(s) + "'");
}

CorrelationMode correlation_mode_from_string(std::string_view s) {
  if (s == "signed") return CorrelationMode::signed_max;
  if (s == "absolute") return CorrelationMode::absolute_max;
  throw ConfigError("unknown correlation mode '" + std::string(s) + "'");
}

std::vector<std::size_t> ProfilerConfig::effective_seasonal_periods() const {
  if (!seasonal_periods.empty()) return seasonal_periods;
  if (expected_interval.count() <= 0) return {};
  const auto day = std::chrono::duration_cast<Duration>(std::chrono::hours{24});
  const auto period = static_cast<std::size_t>(day / expected_interval);
  if (period < 2) return {};
  return {period};
}

void ProfilerConfig::validate() const {
  if (expected_interval.count() <= 0) throw ConfigError("expected_interval must be > 0");
  if (interval_tolerance.count() < 0) throw ConfigError("interval_tolerance must be >= 0");
  if (!(sms_max.count() > 0 && sms_max < mms_max))
    throw ConfigError("thresholds must satisfy 0 < sms_max < mms_max");
  if (!(outlier_coefficient >= 0.0) || !std::isfinite(outlier_coefficient))
    throw ConfigError("outlier_coefficient must be a finite number >= 0");
  if (!(spike_k > 0.0) || !std::isfinite(spike_k)) throw ConfigError("spike_k must be > 0");
  if (!(correlation_threshold >= -1.0 && correlation_threshold <= 1.0))
    throw ConfigError("correlation_threshold must lie in [-1, 1]");
  if (max_cross_delay.count() < 0) throw ConfigError("max_cross_delay must be >= 0");
  if (!(seasonal_tolerance >= 0.0)) throw ConfigError("seasonal_tolerance must be >= 0");
  for (std::size_t p : seasonal_periods)
    if (p < 2) throw ConfigError("seasonal_periods entries must be >= 2");

  double w4 = 0.0;
  for (double w : veracity_weights) {
    if (!(w >= 0.0)) throw ConfigError("veracity_weights must be non-negative");
    w4 += w;
  }
  if (std::abs(w4 - 1.0) > 1e-12) throw ConfigError("veracity_weights must sum to 1");
  double w5 = 0.0;
  for (double w : variability_weights) {
    if (!(w >= 0.0)) throw ConfigError("variability_weights must be non-negative");
    w5 += w;
  }
  if (std::abs(w5 - 1.0) > 1e-12) throw ConfigError("variability_weights must sum to 1");

  if (grid_start && grid_end && *grid_start > *grid_end) throw ConfigError("grid_start must be <= grid_end");
  if (timestamp_column.empty()) throw ConfigError("timestamp_column must not be empty");
  if (timestamp_format.format == TimestampFormat::custom && timestamp_format.pattern.empty())
    throw ConfigError("custom timestamp format requires timestamp_pattern");
  if (delimiter == '"' || delimiter == '\n' || delimiter == '\r') throw ConfigError("invalid delimiter");
  if (required_interval && required_interval->count() <= 0)
    throw ConfigError("required_interval must be > 0");
}

ProfilerConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  ProfilerConfig c;
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "expected_interval") c.expected_interval = duration_field(v, "expected_interval");
      else if (key == "interval_tolerance") c.interval_tolerance = duration_field(v, "interval_tolerance");
      else if (key == "sms_max") c.sms_max = duration_field(v, "sms_max");
      else if (key == "mms_max") c.mms_max = duration_field(v, "mms_max");
      else if (key == "outlier_coefficient") c.outlier_coefficient = number(v, "outlier_coefficient");
      else if (key == "quantile_method") c.quantile_method = quantile_method_from_string(v.get<std::string>());
      else if (key == "spike_k") c.spike_k = number(v, "spike_k");
      else if (key == "spike_bounds") c.spike_bounds = bounds_map(v, "spike_bounds");
      else if (key == "physical_bounds") c.physical_bounds = bounds_map(v, "physical_bounds");
      else if (key == "correlation_threshold") c.correlation_threshold = number(v, "correlation_threshold");
      else if (key == "max_cross_delay") c.max_cross_delay = duration_field(v, "max_cross_delay");
      else if (key == "correlation_mode") c.correlation_mode = correlation_mode_from_string(v.get<std::string>());
      else if (key == "max_acf_lag") c.max_acf_lag = count_field(v, "max_acf_lag");
      else if (key == "seasonal_periods") {
        if (!v.is_array()) throw ConfigError("'seasonal_periods' must be an array");
        c.seasonal_periods.clear();
        for (const auto& p : v) c.seasonal_periods.push_back(count_field(p, "seasonal_periods"));
      } else if (key == "seasonal_tolerance") c.seasonal_tolerance = number(v, "seasonal_tolerance");
      else if (key == "veracity_weights") c.veracity_weights = weights_field<4>(v, "veracity_weights");
      else if (key == "variability_weights") c.variability_weights = weights_field<3>(v, "variability_weights");
      else if (key == "duplicate_policy") c.duplicate_policy = merge_policy_from_string(v.get<std::string>());
      else if (key == "grid_conflict_policy") c.grid_conflict_policy = merge_policy_from_string(v.get<std::string>());
      else if (key == "grid_start") c.grid_start = instant_field(v, "grid_start");
      else if (key == "grid_end") c.grid_end = instant_field(v, "grid_end");
      else if (key == "timestamp_column") c.timestamp_column = v.get<std::string>();
      else if (key == "timestamp_format") c.timestamp_format.format = timestamp_format_from_string(v.get<std::string>());
      else if (key == "timestamp_pattern") c.timestamp_format.pattern = v.get<std::string>();
      else if (key == "delimiter") {
        const auto d = v.get<std::string>();
        if (d.size() != 1) throw ConfigError("'delimiter' must be a single character");
        c.delimiter = d[0];
      } else if (key == "missing_tokens") c.missing_tokens = v.get<std::vector<std::string>>();
      else if (key == "required_interval") c.required_interval = duration_field(v, "required_interval");
      else if (key == "volume_threshold") c.volume_threshold = v.get<unsigned long long>();
      else throw ConfigError("unknown configuration field '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("configuration: ") + e.what());
  }
  c.validate();
  return c;
}

json to_json(const ProfilerConfig& c) {
  json j;
  j["expected_interval"] = to_seconds(c.expected_interval);
  j["interval_tolerance"] = to_seconds(c.interval_tolerance);
  j["sms_max"] = to_seconds(c.sms_max);
  j["mms_max"] = to_seconds(c.mms_max);
  j["outlier_coefficient"] = c.outlier_coefficient;
  j["quantile_method"] = to_string(c.quantile_method);
  j["spike_k"] = c.spike_k;
  j["spike_bounds"] = bounds_json(c.spike_bounds);
  j["physical_bounds"] = bounds_json(c.physical_bounds);
  j["correlation_threshold"] = c.correlation_threshold;
  j["max_cross_delay"] = to_seconds(c.max_cross_delay);
  j["correlation_mode"] = to_string(c.correlation_mode);
  j["max_acf_lag"] = c.max_acf_lag;
  j["seasonal_periods"] = c.seasonal_periods;
  j["seasonal_tolerance"] = c.seasonal_tolerance;
  j["veracity_weights"] = c.veracity_weights;
  j["variability_weights"] = c.variability_weights;
  j["duplicate_policy"] = to_string(c.duplicate_policy);
  j["grid_conflict_policy"] = to_string(c.grid_conflict_policy);
  if (c.grid_start) j["grid_start"] = render_timestamp(*c.grid_start);
  if (c.grid_end) j["grid_end"] = render_timestamp(*c.grid_end);
  j["timestamp_column"] = c.timestamp_column;
  j["timestamp_format"] = to_string(c.timestamp_format.format);
  if (!c.timestamp_format.pattern.empty()) j["timestamp_pattern"] = c.timestamp_format.pattern;
  j["delimiter"] = std::string(1, c.delimiter);
  j["missing_tokens"] = c.missing_tokens;
  if (c.required_interval) j["required_interval"] = to_seconds(*c.required_interval);
  if (c.volume_threshold) j["volume_threshold"] = *c.volume_threshold;
  return j;
}

}  // namespace sixvs
