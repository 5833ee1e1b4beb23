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
#include <string>
#include <vector>

#include "sixvs/config.hpp"
#include "sixvs/feature_analysis.hpp"
#include "sixvs/ingestion.hpp"
#include "sixvs/scoring.hpp"
#include "sixvs/timestamp_analysis.hpp"
#include "sixvs/value_analysis.hpp"

namespace sixvs {

struct AlignmentSummary {
  std::size_t slots = 0;
  std::size_t assigned = 0;
  std::size_t dropped = 0;
  std::size_t merged_slots = 0;
};

/// Every indicator computed for one feature.
struct FeatureProfile {
  FeatureSchema schema;

  // Timestamp understanding.
  DuplicateReport duplicates;
  std::vector<Resolution> resolutions;
  IntervalReport intervals;

  // Value understanding.
  FeatureFormat format;
  FeatureForm form;
  MissingReport missing_old;
  std::optional<SpikeReport> spikes;
  std::optional<ContinuousProfile> continuous;
  std::optional<CategoricalProfile> categorical;
  std::optional<OutlierReport> outliers;
  std::vector<IndicatorSlot> slots;

  // Feature understanding.
  AlignmentSummary alignment;
  MissingReport missing_new;
};

struct PipelineEvent {
  std::string stage;
  std::string feature;
  std::string message;
  friend bool operator==(const PipelineEvent&, const PipelineEvent&) = default;
};

struct DatasetProfile {
  std::string name;
  ProfilerConfig config;
  unsigned long long nf = 0;
  unsigned long long ni = 0;
  std::vector<FeatureProfile> features;
  FormDistribution forms;
  RegularGrid grid;
  CorrelationMatrix correlations;
  SixVsScores scores;
  std::vector<RejectedRow> rejected_rows;
  std::vector<PipelineEvent> log;

  const FeatureProfile* find(std::string_view feature) const noexcept;
};

/// Timestamp, value and feature understanding in that order, then scoring.
/// Per-feature stages run concurrently; the result does not depend on it.
DatasetProfile run_pipeline(const Dataset& ds, const ProfilerConfig& config);

/// Scores derived purely from the indicators stored in `profile`.
SixVsScores compute_scores(const DatasetProfile& profile);

/// Names of the scores that differ from a recomputation by more than `tolerance`.
std::vector<std::string> inconsistent_scores(const DatasetProfile& profile, double tolerance = 1e-9);

}  // namespace sixvs
