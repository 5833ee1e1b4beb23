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

#include "sixvs/recommend.hpp"

#include <cstdio>
#include <functional>
#include <map>

#include "rules.hpp"
#include "sixvs/errors.hpp"

namespace sixvs {
namespace {

using Values = std::map<std::string, std::string>;
using Condition = std::function<std::optional<Values>(const DatasetProfile&, const FeatureProfile*, const Rule&)>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g%%", v * 100.0);
  return buf;
}

std::optional<bool> seasonal_flag(const FeatureProfile& f) {
  if (f.continuous) return f.continuous->seasonality.seasonal;
  if (f.categorical) return f.categorical->seasonality.seasonal;
  return std::nullopt;
}

std::optional<std::size_t> seasonal_period(const FeatureProfile& f) {
  if (f.continuous) return f.continuous->seasonality.period;
  if (f.categorical) return f.categorical->seasonality.period;
  return std::nullopt;
}

// Gaps are judged on the grid-aligned series, which also sees missing rows.
const MissingReport& gaps(const FeatureProfile& f, const DatasetProfile& p) {
  return p.grid.slots > 0 ? f.missing_new : f.missing_old;
}

Values span_values(const FeatureProfile& f, const MissingReport& m) {
  return {{"feature", f.schema.name}, {"pmv", pct(m.pmv)}, {"sms", std::to_string(m.sms)},
          {"mms", std::to_string(m.mms)}, {"lms", std::to_string(m.lms)}};
}

const std::map<std::string, Condition, std::less<>>& conditions() {
  static const std::map<std::string, Condition, std::less<>> table{
      {"volume_above_threshold",
       [](const DatasetProfile& p, const FeatureProfile*, const Rule&) -> std::optional<Values> {
         const auto& t = p.config.volume_threshold;
         if (!t || p.scores.vol <= *t) return std::nullopt;
         return Values{{"vol", std::to_string(p.scores.vol)}, {"threshold", std::to_string(*t)}};
       }},
      {"non_structured_data",
       [](const DatasetProfile& p, const FeatureProfile*, const Rule&) -> std::optional<Values> {
         const auto& d = p.scores.components.forms;
         if (!(d.pud + d.pssd > 0.0)) return std::nullopt;
         return Values{{"pud", pct(d.pud)}, {"pssd", pct(d.pssd)}};
       }},
      {"interval_above_requirement",
       [](const DatasetProfile& p, const FeatureProfile*, const Rule&) -> std::optional<Values> {
         const auto& r = p.config.required_interval;
         if (!r || p.scores.vel <= *r) return std::nullopt;
         return Values{{"sdp", render_duration(p.scores.vel)}, {"required", render_duration(*r)}};
       }},
      {"format_violations",
       [](const DatasetProfile&, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         if (f->format.violations == 0) return std::nullopt;
         return Values{{"feature", f->schema.name},
                       {"violations", std::to_string(f->format.violations)},
                       {"format", std::string(to_string(f->schema.expected_format))}};
       }},
      {"differing_duplicates",
       [](const DatasetProfile& p, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         if (f->duplicates.dtd == 0) return std::nullopt;
         return Values{{"feature", f->schema.name},
                       {"dtd", std::to_string(f->duplicates.dtd)},
                       {"policy", std::string(to_string(p.config.duplicate_policy))}};
       }},
      {"same_value_duplicates",
       [](const DatasetProfile&, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         if (f->duplicates.dts == 0) return std::nullopt;
         return Values{{"feature", f->schema.name}, {"dts", std::to_string(f->duplicates.dts)}};
       }},
      {"irregular_intervals",
       [](const DatasetProfile&, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         if (!f->intervals.pti || *f->intervals.pti >= 1.0) return std::nullopt;
         return Values{{"feature", f->schema.name}, {"pti", pct(*f->intervals.pti)}};
       }},
      {"spike_rate_below",
       [](const DatasetProfile&, const FeatureProfile* f, const Rule& r) -> std::optional<Values> {
         if (!f->spikes || f->spikes->nas == 0 || f->spikes->candidates == 0) return std::nullopt;
         const double rate = static_cast<double>(f->spikes->nas) / static_cast<double>(f->spikes->candidates);
         const double limit = r.threshold.value_or(0.01);
         if (!(rate < limit)) return std::nullopt;
         return Values{{"feature", f->schema.name},
                       {"nas", std::to_string(f->spikes->nas)},
                       {"rate", pct(rate)},
                       {"threshold", pct(limit)}};
       }},
      {"spike_rate_at_least",
       [](const DatasetProfile&, const FeatureProfile* f, const Rule& r) -> std::optional<Values> {
         if (!f->spikes || f->spikes->nas == 0 || f->spikes->candidates == 0) return std::nullopt;
         const double rate = static_cast<double>(f->spikes->nas) / static_cast<double>(f->spikes->candidates);
         const double limit = r.threshold.value_or(0.01);
         if (rate < limit) return std::nullopt;
         return Values{{"feature", f->schema.name},
                       {"nas", std::to_string(f->spikes->nas)},
                       {"rate", pct(rate)},
                       {"threshold", pct(limit)}};
       }},
      {"all_missing",
       [](const DatasetProfile&, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         const auto& m = f->missing_old;
         if (m.total == 0 || m.missing != m.total) return std::nullopt;
         return Values{{"feature", f->schema.name}, {"pmv", pct(m.pmv)}};
       }},
      {"short_spans_only",
       [](const DatasetProfile& p, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         const auto& m = gaps(*f, p);
         if (m.spans.empty() || m.lms > 0 || m.missing == m.total) return std::nullopt;
         return span_values(*f, m);
       }},
      {"long_spans_without_seasonality",
       [](const DatasetProfile& p, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         const auto& m = gaps(*f, p);
         const auto seasonal = seasonal_flag(*f);
         if (m.lms == 0 || !seasonal || *seasonal || m.missing == m.total) return std::nullopt;
         return span_values(*f, m);
       }},
      {"long_spans_with_seasonality",
       [](const DatasetProfile& p, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         const auto& m = gaps(*f, p);
         const auto seasonal = seasonal_flag(*f);
         if (m.lms == 0 || !seasonal || !*seasonal) return std::nullopt;
         Values v = span_values(*f, m);
         const auto period = seasonal_period(*f);
         v["period"] = period ? std::to_string(*period) : "?";
         return v;
       }},
      {"constant_feature",
       [](const DatasetProfile&, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         if (f->continuous && f->continuous->cardinality == 1)
           return Values{{"feature", f->schema.name}, {"value", num(f->continuous->min)}};
         if (f->categorical && f->categorical->cardinality == 1)
           return Values{{"feature", f->schema.name}, {"value", *f->categorical->mode}};
         return std::nullopt;
       }},
      {"invalid_indicators",
       [](const DatasetProfile&, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         std::string factors;
         for (const auto& s : f->slots) {
           if (s.valid) continue;
           if (!factors.empty()) factors += ", ";
           factors += s.factor;
         }
         if (factors.empty()) return std::nullopt;
         return Values{{"feature", f->schema.name}, {"factors", factors}};
       }},
      {"physical_outliers",
       [](const DatasetProfile& p, const FeatureProfile* f, const Rule&) -> std::optional<Values> {
         if (!f->outliers || f->outliers->confirmed.empty()) return std::nullopt;
         const auto it = p.config.physical_bounds.find(f->schema.name);
         if (it == p.config.physical_bounds.end()) return std::nullopt;
         return Values{{"feature", f->schema.name},
                       {"confirmed", std::to_string(f->outliers->confirmed.size())},
                       {"min", num(it->second.min)},
                       {"max", num(it->second.max)}};
       }},
  };
  return table;
}

std::string expand(std::string_view text, const Values& values) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '{') {
      const auto close = text.find('}', i);
      if (close != std::string_view::npos) {
        const auto it = values.find(std::string(text.substr(i + 1, close - i - 1)));
        if (it != values.end()) {
          out += it->second;
          i = close;
          continue;
        }
      }
    }
    out += text[i];
  }
  return out;
}

std::optional<Values> evaluate(const Rule& rule, const DatasetProfile& p, const FeatureProfile* f) {
  const auto it = conditions().find(rule.condition);
  if (it == conditions().end()) return std::nullopt;
  auto values = it->second(p, f, rule);
  if (values && rule.threshold && !values->count("threshold")) (*values)["threshold"] = num(*rule.threshold);
  return values;
}

template <typename Enum, std::size_t N>
Enum enum_from(std::string_view s, const std::array<Enum, N>& all, const char* what) {
  for (Enum e : all)
    if (to_string(e) == s) return e;
  throw ConfigError(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

}  // namespace

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::volume: return "volume";
    case Dimension::variety: return "variety";
    case Dimension::velocity: return "velocity";
    case Dimension::veracity: return "veracity";
    case Dimension::value: return "value";
    case Dimension::variability: return "variability";
  }
  return "volume";
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::info: return "info";
    case Severity::warn: return "warn";
    case Severity::critical: return "critical";
  }
  return "info";
}

std::string_view to_string(RuleScope s) { return s == RuleScope::dataset ? "dataset" : "feature"; }

Dimension dimension_from_string(std::string_view s) {
  return enum_from(s,
                   std::array{Dimension::volume, Dimension::variety, Dimension::velocity, Dimension::veracity,
                              Dimension::value, Dimension::variability},
                   "dimension");
}

Severity severity_from_string(std::string_view s) {
  return enum_from(s, std::array{Severity::info, Severity::warn, Severity::critical}, "severity");
}

RuleTable rules_from_json(const nlohmann::json& doc) {
  RuleTable t;
  try {
    t.version = doc.at("version").get<int>();
    for (const auto& r : doc.at("rules")) {
      Rule rule;
      rule.id = r.at("id").get<std::string>();
      rule.dimension = dimension_from_string(r.at("dimension").get<std::string>());
      const auto scope = r.at("scope").get<std::string>();
      if (scope != "dataset" && scope != "feature") throw ConfigError("rule " + rule.id + ": unknown scope " + scope);
      rule.scope = scope == "dataset" ? RuleScope::dataset : RuleScope::feature;
      rule.condition = r.at("condition").get<std::string>();
      if (!conditions().count(rule.condition))
        throw ConfigError("rule " + rule.id + ": unknown condition " + rule.condition);
      if (r.contains("threshold")) rule.threshold = r.at("threshold").get<double>();
      rule.severity = severity_from_string(r.at("severity").get<std::string>());
      rule.trigger = r.at("trigger").get<std::string>();
      rule.action = r.at("action").get<std::string>();
      t.rules.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed rule table: ") + e.what());
  }
  return t;
}

const RuleTable& default_rules() {
  static const RuleTable table = rules_from_json(nlohmann::json::parse(detail::kDefaultRules));
  return table;
}

std::vector<Recommendation> recommend(const DatasetProfile& profile, const RuleTable& rules) {
  std::vector<Recommendation> out;
  auto emit = [&](const Rule& rule, const FeatureProfile* f) {
    const auto values = evaluate(rule, profile, f);
    if (!values) return;
    out.push_back({rule.id, rule.dimension, f ? f->schema.name : std::string(), rule.severity,
                   expand(rule.trigger, *values), expand(rule.action, *values)});
  };
  for (const auto& rule : rules.rules) {
    if (rule.scope == RuleScope::dataset) {
      emit(rule, nullptr);
    } else {
      for (const auto& f : profile.features) emit(rule, &f);
    }
  }
  return out;
}

bool trigger_holds(const Recommendation& rec, const DatasetProfile& profile, const RuleTable& rules) {
  for (const auto& rule : rules.rules) {
    if (rule.id != rec.rule) continue;
    if (rule.scope == RuleScope::dataset) return rec.feature.empty() && evaluate(rule, profile, nullptr).has_value();
    const FeatureProfile* f = profile.find(rec.feature);
    return f != nullptr && evaluate(rule, profile, f).has_value();
  }
  return false;
}

}  // namespace sixvs
