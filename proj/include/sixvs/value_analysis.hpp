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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sixvs/config.hpp"
#include "sixvs/ingestion.hpp"
#include "sixvs/series.hpp"

namespace sixvs {

// ---------------------------------------------------------------------------
// Format and form
// ---------------------------------------------------------------------------

struct FeatureFormat {
  std::string feature;
  bool correct = true;
  /// No non-missing cells at all; correctness holds vacuously.
  bool degenerate = false;
  std::size_t violations = 0;
};

struct FormatReport {
  std::vector<FeatureFormat> features;
  double pcdf = 1.0;
};

/// Volume fractions of structured, unstructured and semi-structured data.
struct FormDistribution {
  double psd = 1.0;
  double pud = 0.0;
  double pssd = 0.0;
};

struct FeatureForm {
  std::string feature;
  DataForm form = DataForm::structured;
  /// Cell-level classification of the feature's non-missing cells.
  FormDistribution cells;
  std::size_t volume = 0;
};

struct FormReport {
  std::vector<FeatureForm> features;
  FormDistribution overall;
};

FormatReport check_formats(const Dataset& ds);

/// Structured unless the text is a key-value/markup payload (JSON object or
/// array, XML-like element, `k=v;k=v` pairs) or multi-word free text.
DataForm classify_cell(std::string_view text);

/// A feature takes its declared form unless more than half of its cells are
/// semi-structured or unstructured payloads. The overall distribution weights
/// each feature's form by its cell volume.
FormReport classify_forms(const Dataset& ds);

/// Volume-weighted distribution of per-feature forms (feature counts when no
/// feature has any cells).
FormDistribution form_distribution(std::span<const FeatureForm> features);

// ---------------------------------------------------------------------------
// Missing values
// ---------------------------------------------------------------------------

enum class SpanClass { short_term, medium_term, long_term };
std::string_view to_string(SpanClass c);

struct MissingSpan {
  Instant start;
  Instant end;
  std::size_t length = 0;
  Duration duration{0};
  SpanClass span_class = SpanClass::short_term;
};

struct MissingReport {
  double pmv = 0.0;
  std::size_t missing = 0;
  std::size_t total = 0;
  std::vector<MissingSpan> spans;
  std::size_t sms = 0;
  std::size_t mms = 0;
  std::size_t lms = 0;
};

/// Maximal runs of missing markers; a run lasts length x interval.
MissingReport analyze_missing(const TimedSeries& s, Duration sms_max, Duration mms_max, Duration interval);

// ---------------------------------------------------------------------------
// Spikes
// ---------------------------------------------------------------------------

struct SpikeEvent {
  Instant timestamp;
  double value = 0.0;
  /// Position in the input series.
  std::size_t index = 0;
};

struct SpikeReport {
  std::size_t nas = 0;
  std::vector<SpikeEvent> events;
  bool insufficient_data = false;
  /// Interior points of the missing-removed sequence (the NAS denominator bound).
  std::size_t candidates = 0;
};

/// Runs on the missing-removed sequence. Point i is a spike when both of its
/// neighbour differences share a sign and exceed k times the standard
/// deviation of the remaining first differences, or when it lies outside
/// `bounds`. Only interior points are candidates.
SpikeReport detect_spikes(const TimedSeries& s, double k, std::optional<ValueBounds> bounds = std::nullopt);

// ---------------------------------------------------------------------------
// Seasonality and autocorrelation
// ---------------------------------------------------------------------------

enum class DecompositionModel { additive, multiplicative };

struct DecompositionResult {
  std::vector<double> trend;
  std::vector<double> seasonal;
  std::vector<double> residual;
  DecompositionModel model = DecompositionModel::additive;
  std::size_t period = 0;
};

/// Classical moving-average decomposition. Throws DecompositionUnavailable
/// when the longest gap-free run is shorter than 2 x period.
DecompositionResult decompose(const TimedSeries& s, std::size_t period, DecompositionModel model);

struct SeasonalityResult {
  bool seasonal = false;
  /// No candidate period could be decomposed.
  bool low_confidence = false;
  std::optional<std::size_t> period;
  /// Largest (max - min) of the seasonal component over std(s).
  std::optional<double> strength;
};

SeasonalityResult detect_seasonality(const TimedSeries& s, std::span<const std::size_t> periods, double tolerance);

/// Pairwise-complete ACF over the gap-preserving series, normalised by the
/// full present-value sum of squares. Undefined for constant or empty series.
std::optional<std::vector<double>> autocorrelation(const TimedSeries& s, std::size_t max_lag);

/// 1 where a categorical series holds its mode, 0 elsewhere, missing kept.
TimedSeries mode_indicator(const TimedSeries& s);

// ---------------------------------------------------------------------------
// Profiles and outliers
// ---------------------------------------------------------------------------

struct ContinuousProfile {
  std::size_t count = 0;
  std::size_t cardinality = 0;
  double min = 0, q1 = 0, mean = 0, median = 0, q3 = 0, max = 0, std = 0;
  std::optional<double> skewness;
  std::optional<double> excess_kurtosis;
  SeasonalityResult seasonality;
  std::optional<std::vector<double>> acf;

  bool defined() const noexcept { return count > 0; }
};

struct CategoricalProfile {
  std::size_t count = 0;
  std::size_t cardinality = 0;
  std::optional<std::string> mode;
  std::size_t mode_freq = 0;
  double mode_pct = 0.0;
  SeasonalityResult seasonality;
  std::optional<std::vector<double>> acf;

  bool defined() const noexcept { return count > 0; }
};

/// Statistics over non-missing values; ACF and seasonality over the
/// gap-preserving series.
ContinuousProfile continuous_profile(const TimedSeries& s, const ProfilerConfig& config);
CategoricalProfile categorical_profile(const TimedSeries& s, const ProfilerConfig& config);

struct OutlierReport {
  bool defined = false;
  double q1 = 0, q3 = 0, iqr = 0, lower = 0, upper = 0;
  /// Positions in the input series strictly outside [lower, upper].
  std::vector<std::size_t> indices;
  /// Outliers that also fall outside the configured physical bounds.
  std::vector<std::size_t> confirmed;
  /// Non-missing values examined (the rate denominator).
  std::size_t count = 0;
  double rate = 0.0;
};

/// Undefined for fewer than four non-missing values.
OutlierReport detect_outliers(const TimedSeries& s, double c, QuantileMethod method = QuantileMethod::linear,
                              std::optional<ValueBounds> physical = std::nullopt);

}  // namespace sixvs
