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
#include <string_view>
#include <vector>

#include "sixvs/config.hpp"
#include "sixvs/ingestion.hpp"
#include "sixvs/series.hpp"

namespace sixvs {

struct CrossCorrelationResult {
  std::string feature_a;
  std::string feature_b;
  std::optional<double> best_value;
  /// In grid intervals; positive k pairs x_t with y_{t+k}.
  long long best_lag = 0;
};

/// Pearson correlation of (x_t, y_{t+k}) over pairwise-present positions for
/// each k in [-max_lag, max_lag]; entry k + max_lag. Undefined when fewer than
/// three pairs overlap or either side is constant over the overlap. Both
/// series must have the same length (one grid); throws std::invalid_argument otherwise.
std::vector<std::optional<double>> lagged_correlations(const TimedSeries& x, const TimedSeries& y,
                                                       std::size_t max_lag);

/// Best lagged correlation within max_delay. Ties (within 1e-12) prefer the
/// smallest |k|, then the negative lag.
CrossCorrelationResult cross_correlation(const TimedSeries& x, const TimedSeries& y, Duration max_delay,
                                         Duration interval, CorrelationMode mode = CorrelationMode::signed_max);

class CorrelationMatrix {
 public:
  CorrelationMatrix() = default;
  CorrelationMatrix(std::vector<std::string> features, std::vector<CrossCorrelationResult> pairs,
                    std::vector<CrossCorrelationResult> diagonal);

  const std::vector<std::string>& features() const noexcept { return features_; }
  /// Unordered pairs (i < j) in schema order.
  const std::vector<CrossCorrelationResult>& pairs() const noexcept { return pairs_; }
  const std::vector<CrossCorrelationResult>& diagonal() const noexcept { return diagonal_; }

  /// Entry for (a, b) oriented as asked: the lag of (b, a) is the negated lag of (a, b).
  std::optional<CrossCorrelationResult> entry(std::string_view a, std::string_view b) const;

 private:
  std::vector<std::string> features_;
  std::vector<CrossCorrelationResult> pairs_;
  std::vector<CrossCorrelationResult> diagonal_;
};

/// All unordered pairs of continuous features of a grid-aligned dataset.
CorrelationMatrix correlation_matrix(const Dataset& aligned, Duration max_delay, Duration interval,
                                     CorrelationMode mode = CorrelationMode::signed_max);

/// Missing fraction of each aligned series, in feature order.
std::vector<double> recompute_pmv(const Dataset& aligned);

}  // namespace sixvs
