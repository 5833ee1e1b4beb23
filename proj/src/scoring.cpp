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

#include "sixvs/scoring.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace sixvs {
namespace {

constexpr std::array<const char*, 13> kContinuous{
    "cardinality", "min", "q1", "mean", "median", "q3", "max",
    "std", "skewness", "excess_kurtosis", "seasonality", "acf", "decomposition"};
constexpr std::array<const char*, 7> kCategorical{
    "cardinality", "mode", "mode_freq", "mode_pct", "seasonality", "acf", "decomposition"};

}  // namespace

unsigned long long score_volume(unsigned long long nf, unsigned long long ni) {
  unsigned long long out = 0;
  if (__builtin_mul_overflow(nf, ni, &out)) throw std::overflow_error("volume does not fit in 64 bits");
  return out;
}

double score_variety(const FormDistribution& fd) {
  const double rest = fd.pud + fd.pssd;
  if (rest <= 0.0) return std::numeric_limits<double>::infinity();
  return fd.psd / rest;
}

Duration score_velocity(const ProfilerConfig& config) { return config.expected_interval; }

std::optional<VeracityTerms> veracity_terms(double pcdf, double mean_nas, unsigned long long ni, double mean_pti,
                                            double mean_pmv_raw) {
  if (ni <= 2) return std::nullopt;
  VeracityTerms t;
  t.format = 1.0 - pcdf;
  t.spikes = mean_nas / static_cast<double>(ni - 2);
  t.intervals = 1.0 - mean_pti;
  t.missing = mean_pmv_raw;
  return t;
}

std::optional<double> score_veracity(double pcdf, double mean_nas, unsigned long long ni, double mean_pti,
                                     double mean_pmv_raw, const std::array<double, 4>& w) {
  const auto t = veracity_terms(pcdf, mean_nas, ni, mean_pti, mean_pmv_raw);
  if (!t) return std::nullopt;
  return t->format * w[0] + t->spikes * w[1] + t->intervals * w[2] + t->missing * w[3];
}

std::span<const char* const> continuous_factors() { return kContinuous; }
std::span<const char* const> categorical_factors() { return kCategorical; }

std::vector<IndicatorSlot> indicator_slots(const std::string& feature, const ContinuousProfile& p) {
  const bool any = p.defined();
  // Same order as kContinuous.
  const std::array<bool, 13> valid{any, any, any, any, any, any, any, any,
                                   p.skewness.has_value(), p.excess_kurtosis.has_value(), any,
                                   p.acf.has_value(), !p.seasonality.low_confidence};
  std::vector<IndicatorSlot> out;
  for (std::size_t i = 0; i < kContinuous.size(); ++i) out.push_back({feature, kContinuous[i], valid[i]});
  return out;
}

std::vector<IndicatorSlot> indicator_slots(const std::string& feature, const CategoricalProfile& p) {
  const bool any = p.defined();
  const std::array<bool, 7> valid{any, p.mode.has_value(), any, any, any, p.acf.has_value(),
                                  !p.seasonality.low_confidence};
  std::vector<IndicatorSlot> out;
  for (std::size_t i = 0; i < kCategorical.size(); ++i) out.push_back({feature, kCategorical[i], valid[i]});
  return out;
}

std::optional<double> score_value(std::span<const IndicatorSlot> slots) {
  if (slots.empty()) return std::nullopt;
  const auto invalid = std::count_if(slots.begin(), slots.end(), [](const IndicatorSlot& s) { return !s.valid; });
  return static_cast<double>(invalid) / static_cast<double>(slots.size());
}

std::optional<double> normalized_std(std::span<const double> stds) {
  if (stds.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(stds.begin(), stds.end());
  if (*hi == *lo) return 0.0;
  const double range = *hi - *lo;
  double sum = 0.0;
  for (double s : stds) sum += (s - *lo) / range;
  return sum / static_cast<double>(stds.size());
}

VariabilityScore score_variability(std::span<const double> stds, std::span<const double> rates,
                                   std::span<const std::optional<double>> pair_values, double threshold,
                                   const std::array<double, 3>& w) {
  VariabilityScore out;
  out.nstd = normalized_std(stds);
  if (!rates.empty()) {
    double sum = 0.0;
    for (double r : rates) sum += r;
    out.po = sum / static_cast<double>(rates.size());
  }
  for (const auto& v : pair_values) {
    if (!v) continue;
    ++out.defined_pairs;
    if (*v > threshold) ++out.high_pairs;
  }
  if (out.defined_pairs > 0)
    out.vc = static_cast<double>(out.high_pairs) / static_cast<double>(out.defined_pairs);
  if (out.nstd && out.vc) out.varia = *out.nstd * w[0] + out.po * w[1] + (1.0 - *out.vc) * w[2];
  return out;
}

VariabilityScore score_variability(std::span<const double> stds, std::span<const double> rates,
                                   const CorrelationMatrix& matrix, double threshold,
                                   const std::array<double, 3>& w) {
  std::vector<std::optional<double>> values;
  values.reserve(matrix.pairs().size());
  for (const auto& p : matrix.pairs()) values.push_back(p.best_value);
  return score_variability(stds, rates, values, threshold, w);
}

}  // namespace sixvs
