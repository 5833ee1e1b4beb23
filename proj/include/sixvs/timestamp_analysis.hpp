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
#include "sixvs/series.hpp"

namespace sixvs {

struct DuplicateGroup {
  Instant timestamp;
  /// Positions in the input series (at least two).
  std::vector<std::size_t> rows;
  bool same_value = true;
};

struct DuplicateReport {
  std::size_t dts = 0;
  std::size_t dtd = 0;
  std::vector<DuplicateGroup> groups;
};

struct Resolution {
  Instant timestamp;
  std::size_t rows = 0;
  bool same_value = true;
  double chosen = kMissing;
  /// The chosen category for categorical series.
  std::optional<std::string> token;
};

struct IntervalReport {
  Duration expected{0};
  std::size_t total_intervals = 0;
  std::size_t normal_intervals = 0;
  /// Undefined for series shorter than two samples.
  std::optional<double> pti;
  /// Index i marks the interval between samples i and i+1.
  std::vector<std::size_t> irregular_positions;
};

struct RegularGrid {
  Instant start;
  Instant end;
  Duration interval{0};
  std::size_t slots = 0;

  Instant at(std::size_t slot) const { return start + interval * static_cast<long long>(slot); }
};

struct AlignmentResult {
  TimedSeries series;
  /// Input entries placed on a slot (with multiplicity).
  std::size_t assigned = 0;
  /// Input entries outside [start - interval/2, end + interval/2].
  std::size_t dropped = 0;
  /// Slots that received more than one non-missing value.
  std::size_t merged_slots = 0;
};

/// Requires non-decreasing timestamps.
DuplicateReport detect_duplicates(const TimedSeries& s);

/// Collapses every duplicate group to one entry. Same-value groups keep the
/// shared value; differing groups merge per `policy` (categorical series always
/// keep the first non-missing token). Resolutions are appended to `log`.
TimedSeries resolve_duplicates(const TimedSeries& s, const DuplicateReport& report, MergePolicy policy,
                               std::vector<Resolution>* log = nullptr);

IntervalReport interval_analysis(const TimedSeries& s, Duration expected, Duration tolerance);

/// Throws ConfigError when interval <= 0 or start > end.
RegularGrid build_grid(Instant start, Instant end, Duration interval);

/// Grid spanning [first, last] rounded to the nearest multiple of `interval`
/// since the epoch, with optional explicit bounds.
RegularGrid default_grid(Instant first, Instant last, Duration interval, std::optional<Instant> start_override,
                         std::optional<Instant> end_override);

/// Nearest-slot assignment; exact midpoints go to the earlier slot.
AlignmentResult align_to_grid(const TimedSeries& s, const RegularGrid& grid, MergePolicy conflict_policy);

/// Merge of a group of values: missing entries are ignored; all-missing yields missing.
double merge_values(std::vector<double> values, MergePolicy policy, bool categorical);

}  // namespace sixvs
