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

#include <optional>
#include <span>
#include <vector>

#include "sixvs/config.hpp"

namespace sixvs {

/// Quantile of already-sorted data. `p` in [0, 1]; `sorted` must be non-empty.
/// `linear` interpolates between order statistics at h = (n - 1) p.
double quantile_sorted(std::span<const double> sorted, double p, QuantileMethod method);

/// Same as quantile_sorted but on unsorted data, via selection. Reorders `data`.
double quantile_select(std::span<double> data, double p, QuantileMethod method);

struct Moments {
  double mean = 0.0;
  /// Population variance (m2).
  double variance = 0.0;
  double std = 0.0;
  /// m3 / m2^1.5; undefined when m2 = 0.
  std::optional<double> skewness;
  /// m4 / m2^2 - 3; undefined when m2 = 0.
  std::optional<double> excess_kurtosis;
};

/// Central moments over `values` (two-pass). Requires a non-empty span.
Moments central_moments(std::span<const double> values);

}  // namespace sixvs
