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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sixvs/config.hpp"
#include "sixvs/feature_analysis.hpp"
#include "sixvs/value_analysis.hpp"

namespace sixvs {

/// NF x NI. Throws std::overflow_error if the product does not fit in 64 bits.
unsigned long long score_volume(unsigned long long nf, unsigned long long ni);

/// psd / (pud + pssd); +infinity for an all-structured dataset.
double score_variety(const FormDistribution& fd);

/// The configured acquisition interval.
Duration score_velocity(const ProfilerConfig& config);

/// The four unweighted veracity terms.
struct VeracityTerms {
  double format = 0.0;     // 1 - pcdf
  double spikes = 0.0;     // mean_nas / (ni - 2)
  double intervals = 0.0;  // 1 - mean_pti
  double missing = 0.0;    // mean raw pmv
};

/// Undefined when ni <= 2.
std::optional<VeracityTerms> veracity_terms(double pcdf, double mean_nas, unsigned long long ni, double mean_pti,
                                            double mean_pmv_raw);
std::optional<double> score_veracity(double pcdf, double mean_nas, unsigned long long ni, double mean_pti,
                                     double mean_pmv_raw, const std::array<double, 4>& weights);

/// One attempted statistical factor of one feature.
struct IndicatorSlot {
  std::string feature;
  std::string factor;
  bool valid = true;
  friend bool operator==(const IndicatorSlot&, const IndicatorSlot&) = default;
};

/// Factor names attempted for each feature kind, in report order.
std::span<const char* const> continuous_factors();
std::span<const char* const> categorical_factors();

std::vector<IndicatorSlot> indicator_slots(const std::string& feature, const ContinuousProfile& p);
std::vector<IndicatorSlot> indicator_slots(const std::string& feature, const CategoricalProfile& p);

/// Fraction of invalid slots; undefined when nothing was attempted.
std::optional<double> score_value(std::span<const IndicatorSlot> slots);

struct VariabilityScore {
  std::optional<double> nstd;
  double po = 0.0;
  std::optional<double> vc;
  std::size_t high_pairs = 0;
  std::size_t defined_pairs = 0;
  std::optional<double> varia;
};

/// Min-max scaled mean of `stds`; all-equal inputs scale to 0.
std::optional<double> normalized_std(std::span<const double> stds);

/// Undefined best values are skipped; vc counts values strictly above threshold.
VariabilityScore score_variability(std::span<const double> stds, std::span<const double> rates,
                                   std::span<const std::optional<double>> pair_values, double threshold,
                                   const std::array<double, 3>& weights);
VariabilityScore score_variability(std::span<const double> stds, std::span<const double> rates,
                                   const CorrelationMatrix& matrix, double threshold,
                                   const std::array<double, 3>& weights);

struct SixVsScores {
  unsigned long long vol = 0;
  double varie = 0.0;
  Duration vel{0};
  std::optional<double> ver;
  std::optional<double> val;
  std::optional<double> varia;

  struct Components {
    unsigned long long nf = 0;
    unsigned long long ni = 0;
    FormDistribution forms;
    double pcdf = 1.0;
    double mean_nas = 0.0;
    double mean_pti = 1.0;
    double mean_pmv_raw = 0.0;
    std::optional<VeracityTerms> veracity;
    std::size_t invalid_slots = 0;
    std::size_t attempted_slots = 0;
    VariabilityScore variability;
  } components;
};

}  // namespace sixvs
