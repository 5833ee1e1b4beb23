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

#include "sixvs/value_analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <json.hpp>

#include "sixvs/statistics.hpp"

namespace sixvs {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_json(std::string_view s) {
  if (s.size() < 2) return false;
  const bool object = s.front() == '{' && s.back() == '}';
  const bool array = s.front() == '[' && s.back() == ']';
  if (!object && !array) return false;
  return nlohmann::json::accept(s.begin(), s.end());
}

bool looks_like_markup(std::string_view s) {
  if (s.size() < 3 || s.front() != '<' || s.back() != '>') return false;
  if (s.size() < 2 || !(std::isalpha(static_cast<unsigned char>(s[1])) || s[1] == '?' || s[1] == '!')) return false;
  return s.find("/>") != std::string_view::npos || s.find("</") != std::string_view::npos ||
         s.starts_with("<?xml");
}

// "a=1;b=2" or "a:1, b:2" with at least two pairs.
bool looks_like_key_values(std::string_view s) {
  std::size_t pairs = 0;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find_first_of(";,&", start);
    if (end == std::string_view::npos) end = s.size();
    const std::string_view item = trim(s.substr(start, end - start));
    const std::size_t sep = item.find_first_of("=:");
    if (sep == std::string_view::npos || sep == 0 || sep + 1 >= item.size()) return false;
    for (std::size_t i = 0; i < sep; ++i) {
      const char c = item[i];
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) return false;
    }
    ++pairs;
    start = end + 1;
  }
  return pairs >= 2;
}

bool looks_like_free_text(std::string_view s) {
  std::size_t words = 0;
  bool in_word = false;
  for (char c : s) {
    const bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words >= 4 || (words >= 2 && s.size() > 64);
}

struct CellCounts {
  std::size_t structured = 0, semi = 0, unstructured = 0;
  void add(DataForm f, std::size_t n = 1) {
    switch (f) {
      case DataForm::structured: structured += n; break;
      case DataForm::semi_structured: semi += n; break;
      case DataForm::unstructured: unstructured += n; break;
    }
  }
  std::size_t total() const { return structured + semi + unstructured; }
};

FormDistribution distribution(std::size_t structured, std::size_t unstructured, std::size_t semi) {
  const std::size_t total = structured + unstructured + semi;
  if (total == 0) return {};
  FormDistribution d;
  d.pud = static_cast<double>(unstructured) / static_cast<double>(total);
  d.pssd = static_cast<double>(semi) / static_cast<double>(total);
  d.psd = static_cast<double>(structured) / static_cast<double>(total);
  return d;
}

struct Present {
  std::vector<double> values;
  std::vector<std::size_t> index;
};

Present compact(const TimedSeries& s) {
  Present p;
  p.values.reserve(s.size());
  p.index.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_missing(s.values[i])) continue;
    p.values.push_back(s.values[i]);
    p.index.push_back(i);
  }
  return p;
}

struct CodeTally {
  std::size_t count = 0;
  std::size_t cardinality = 0;
  std::optional<std::size_t> mode;
  std::size_t mode_freq = 0;
};

// Most frequent code; ties go to the code seen first.
CodeTally tally_codes(const TimedSeries& s) {
  CodeTally t;
  std::vector<std::size_t> freq;
  std::vector<std::size_t> first_seen;
  for (double v : s.values) {
    if (is_missing(v)) continue;
    const auto code = static_cast<std::size_t>(v);
    if (code >= freq.size()) {
      freq.resize(code + 1, 0);
      first_seen.resize(code + 1, 0);
    }
    if (freq[code]++ == 0) {
      first_seen[code] = t.count;
      ++t.cardinality;
    }
    ++t.count;
  }
  for (std::size_t c = 0; c < freq.size(); ++c) {
    if (freq[c] == 0) continue;
    if (!t.mode || freq[c] > freq[*t.mode] || (freq[c] == freq[*t.mode] && first_seen[c] < first_seen[*t.mode]))
      t.mode = c;
  }
  if (t.mode) t.mode_freq = freq[*t.mode];
  return t;
}

}  // namespace

std::string_view to_string(SpanClass c) {
  switch (c) {
    case SpanClass::short_term: return "SMS";
    case SpanClass::medium_term: return "MMS";
    case SpanClass::long_term: return "LMS";
  }
  return "SMS";
}

FormatReport check_formats(const Dataset& ds) {
  FormatReport r;
  std::size_t correct = 0;
  for (const auto& f : ds.features) {
    FeatureFormat ff;
    ff.feature = f.schema.name;
    ff.violations = f.violations.size();
    ff.correct = f.violations.empty();
    ff.degenerate = f.violations.empty() && f.series.missing_count() == f.series.size();
    correct += ff.correct ? 1 : 0;
    r.features.push_back(std::move(ff));
  }
  r.pcdf = ds.nf() == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(ds.nf());
  return r;
}

DataForm classify_cell(std::string_view text) {
  text = trim(text);
  if (looks_like_json(text) || looks_like_markup(text) || looks_like_key_values(text))
    return DataForm::semi_structured;
  if (looks_like_free_text(text)) return DataForm::unstructured;
  return DataForm::structured;
}

FormReport classify_forms(const Dataset& ds) {
  FormReport r;
  for (const auto& f : ds.features) {
    CellCounts cells;
    const auto& s = f.series;
    if (s.categorical()) {
      std::vector<std::size_t> uses(s.categories->tokens.size(), 0);
      for (double v : s.values)
        if (!is_missing(v)) ++uses[static_cast<std::size_t>(v)];
      for (std::size_t t = 0; t < uses.size(); ++t)
        if (uses[t] > 0) cells.add(classify_cell(s.categories->tokens[t]), uses[t]);
    } else {
      cells.structured += s.size() - s.missing_count();
    }
    for (const auto& v : f.violations) cells.add(classify_cell(v.cell));

    FeatureForm ff;
    ff.feature = f.schema.name;
    ff.volume = cells.total();
    ff.cells = distribution(cells.structured, cells.unstructured, cells.semi);
    ff.form = f.schema.expected_form;
    if (2 * cells.semi > ff.volume) ff.form = DataForm::semi_structured;
    else if (2 * cells.unstructured > ff.volume) ff.form = DataForm::unstructured;
    r.features.push_back(std::move(ff));
  }
  r.overall = form_distribution(r.features);
  return r;
}

FormDistribution form_distribution(std::span<const FeatureForm> features) {
  std::size_t by_form[3] = {0, 0, 0};
  std::size_t features_by_form[3] = {0, 0, 0};
  for (const auto& ff : features) {
    by_form[static_cast<int>(ff.form)] += ff.volume;
    features_by_form[static_cast<int>(ff.form)] += 1;
  }
  const std::size_t total = by_form[0] + by_form[1] + by_form[2];
  const std::size_t* weights = total > 0 ? by_form : features_by_form;
  return distribution(weights[static_cast<int>(DataForm::structured)],
                      weights[static_cast<int>(DataForm::unstructured)],
                      weights[static_cast<int>(DataForm::semi_structured)]);
}

MissingReport analyze_missing(const TimedSeries& s, Duration sms_max, Duration mms_max, Duration interval) {
  MissingReport r;
  r.total = s.size();
  for (std::size_t i = 0; i < s.size();) {
    if (!is_missing(s.values[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && is_missing(s.values[j])) ++j;
    MissingSpan span;
    span.start = s.timestamps[i];
    span.end = s.timestamps[j - 1];
    span.length = j - i;
    span.duration = interval * static_cast<long long>(span.length);
    if (span.duration <= sms_max) {
      span.span_class = SpanClass::short_term;
      ++r.sms;
    } else if (span.duration <= mms_max) {
      span.span_class = SpanClass::medium_term;
      ++r.mms;
    } else {
      span.span_class = SpanClass::long_term;
      ++r.lms;
    }
    r.missing += span.length;
    r.spans.push_back(span);
    i = j;
  }
  r.pmv = r.total == 0 ? 0.0 : static_cast<double>(r.missing) / static_cast<double>(r.total);
  return r;
}

SpikeReport detect_spikes(const TimedSeries& s, double k, std::optional<ValueBounds> bounds) {
  SpikeReport r;
  const Present p = compact(s);
  const std::size_t m = p.values.size();
  if (m < 3) {
    r.insufficient_data = true;
    return r;
  }
  r.candidates = m - 2;

  const std::size_t nd = m - 1;
  std::vector<double> d(nd);
  double mean = 0.0;
  for (std::size_t i = 0; i < nd; ++i) {
    d[i] = p.values[i + 1] - p.values[i];
    mean += d[i];
  }
  mean /= static_cast<double>(nd);
  // Centered sums let each candidate drop its own two differences exactly.
  double c1 = 0.0, c2 = 0.0;
  for (double x : d) {
    c1 += x - mean;
    c2 += (x - mean) * (x - mean);
  }

  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double left = p.values[i] - p.values[i - 1];
    const double right = p.values[i] - p.values[i + 1];
    bool spike = false;
    if ((left > 0 && right > 0) || (left < 0 && right < 0)) {
      const double a = d[i - 1] - mean;
      const double b = d[i] - mean;
      const std::size_t rest = nd - 2;
      double sigma = 0.0;
      if (rest > 0) {
        const double n = static_cast<double>(rest);
        const double s1 = c1 - a - b;
        const double var = std::max(0.0, (c2 - a * a - b * b) / n - (s1 / n) * (s1 / n));
        sigma = std::sqrt(var);
      }
      const double limit = k * sigma;
      spike = std::abs(left) > limit && std::abs(right) > limit;
    }
    if (!spike && bounds && !bounds->contains(p.values[i])) spike = true;
    if (spike) r.events.push_back({s.timestamps[p.index[i]], p.values[i], p.index[i]});
  }
  r.nas = r.events.size();
  return r;
}

std::optional<std::vector<double>> autocorrelation(const TimedSeries& s, std::size_t max_lag) {
  const auto& x = s.values;
  const std::size_t n = x.size();
  double sum = 0.0;
  std::size_t present = 0;
  for (double v : x) {
    if (is_missing(v)) continue;
    sum += v;
    ++present;
  }
  if (present == 0) return std::nullopt;
  const double mean = sum / static_cast<double>(present);
  std::vector<double> c(n);
  double denom = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = is_missing(x[i]) ? kMissing : x[i] - mean;
    if (!is_missing(x[i])) denom += c[i] * c[i];
  }
  const double first = *std::find_if(x.begin(), x.end(), [](double v) { return !is_missing(v); });
  const bool constant = std::all_of(x.begin(), x.end(), [&](double v) { return is_missing(v) || v == first; });
  if (constant || !(denom > 0.0)) return std::nullopt;

  std::vector<double> acf(max_lag + 1, 0.0);
  acf[0] = 1.0;
  for (std::size_t lag = 1; lag <= max_lag && lag < n; ++lag) {
    double num = 0.0;
    for (std::size_t t = 0; t + lag < n; ++t) {
      const double prod = c[t] * c[t + lag];
      if (!std::isnan(prod)) num += prod;
    }
    acf[lag] = num / denom;
  }
  return acf;
}

TimedSeries mode_indicator(const TimedSeries& s) {
  TimedSeries out;
  out.timestamps = s.timestamps;
  out.values.resize(s.size());
  const auto tally = tally_codes(s);
  const double mode = tally.mode ? static_cast<double>(*tally.mode) : kMissing;
  for (std::size_t i = 0; i < s.size(); ++i)
    out.values[i] = is_missing(s.values[i]) ? kMissing : (s.values[i] == mode ? 1.0 : 0.0);
  return out;
}

ContinuousProfile continuous_profile(const TimedSeries& s, const ProfilerConfig& config) {
  ContinuousProfile p;
  std::vector<double> v = s.present_values();
  p.count = v.size();
  const auto periods = config.effective_seasonal_periods();
  p.seasonality = detect_seasonality(s, periods, config.seasonal_tolerance);
  p.acf = autocorrelation(s, config.max_acf_lag);
  if (v.empty()) return p;

  const Moments m = central_moments(v);
  p.mean = m.mean;
  p.std = m.std;
  p.skewness = m.skewness;
  p.excess_kurtosis = m.excess_kurtosis;

  std::sort(v.begin(), v.end());
  p.min = v.front();
  p.max = v.back();
  p.q1 = quantile_sorted(v, 0.25, config.quantile_method);
  p.median = quantile_sorted(v, 0.5, config.quantile_method);
  p.q3 = quantile_sorted(v, 0.75, config.quantile_method);
  p.cardinality = static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  return p;
}

CategoricalProfile categorical_profile(const TimedSeries& s, const ProfilerConfig& config) {
  CategoricalProfile p;
  const auto tally = tally_codes(s);
  p.count = tally.count;
  const TimedSeries indicator = mode_indicator(s);
  p.seasonality = detect_seasonality(indicator, config.effective_seasonal_periods(), config.seasonal_tolerance);
  p.acf = autocorrelation(indicator, config.max_acf_lag);
  if (!tally.mode) return p;

  p.cardinality = tally.cardinality;
  p.mode = s.categorical() ? s.categories->tokens.at(*tally.mode) : std::to_string(*tally.mode);
  p.mode_freq = tally.mode_freq;
  p.mode_pct = static_cast<double>(p.mode_freq) / static_cast<double>(p.count);
  return p;
}

OutlierReport detect_outliers(const TimedSeries& s, double c, QuantileMethod method,
                              std::optional<ValueBounds> physical) {
  OutlierReport r;
  Present p = compact(s);
  r.count = p.values.size();
  if (r.count < 4) return r;
  r.defined = true;
  std::vector<double> scratch = p.values;
  r.q1 = quantile_select(scratch, 0.25, method);
  r.q3 = quantile_select(scratch, 0.75, method);
  r.iqr = r.q3 - r.q1;
  r.upper = r.q3 + c * r.iqr;
  r.lower = r.q1 - c * r.iqr;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    const double v = p.values[i];
    if (v < r.lower || v > r.upper) {
      r.indices.push_back(p.index[i]);
      if (physical && !physical->contains(v)) r.confirmed.push_back(p.index[i]);
    }
  }
  r.rate = static_cast<double>(r.indices.size()) / static_cast<double>(r.count);
  return r;
}

}  // namespace sixvs
