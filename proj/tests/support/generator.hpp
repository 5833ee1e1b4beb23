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
#include <cstdint>
#include <string>
#include <vector>

#include "sixvs/config.hpp"
#include "sixvs/schema.hpp"
#include "sixvs/value_analysis.hpp"

namespace sixvs::testing {

/// What to inject into a synthetic dataset. Every defect is placed apart from
/// every other one so the expected indicator counts are known exactly.
struct DefectPlan {
  std::uint64_t seed = 1;
  std::size_t features = 3;
  Duration interval = std::chrono::seconds{60};
  std::size_t lead_rows = 50;
  std::size_t tail_rows = 50;
  std::size_t dts_groups = 0;
  std::size_t dtd_groups = 0;
  /// Missing-marker runs per class, injected in every feature.
  std::size_t sms_runs = 0;
  std::size_t mms_runs = 0;
  std::size_t lms_runs = 0;
  /// Blocks of rows removed entirely (short runs).
  std::size_t removed_blocks = 0;
  /// Rows whose timestamp is shifted by a fraction of the interval.
  std::size_t jittered_rows = 0;
  /// Far-out values per feature.
  std::size_t outliers = 0;
};

struct FeatureTruth {
  std::size_t dts = 0;
  std::size_t dtd = 0;
  std::size_t sms_old = 0, mms_old = 0, lms_old = 0;
  std::size_t sms_new = 0, mms_new = 0, lms_new = 0;
  std::size_t outliers = 0;
  std::size_t irregular_intervals = 0;
  std::size_t missing_old = 0;
  std::size_t total_old = 0;
  std::size_t missing_new = 0;
  std::size_t total_new = 0;
};

struct Generated {
  std::string csv;
  std::vector<FeatureSchema> schema;
  ProfilerConfig config;
  std::size_t ni = 0;
  std::vector<FeatureTruth> truth;
};

Generated generate_with_defects(const DefectPlan& plan);

/// Random plan for the recovery suite.
DefectPlan random_plan(std::uint64_t seed);

/// Clean dataset for determinism and performance runs: `rows` regular
/// timestamps, `features` continuous columns, light missing values.
Generated generate_bulk(std::size_t rows, std::size_t features, std::uint64_t seed);

}  // namespace sixvs::testing
