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

#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "sixvs/time.hpp"

namespace sixvs {

/// Quiet NaN marks a missing cell in every series.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) noexcept { return std::isnan(v); }

/// Token table of a categorical series; values of the series are indices into `tokens`.
struct CategoryDictionary {
  std::vector<std::string> tokens;
};

/// One feature's (timestamp, value) sequence.
///
/// Continuous features carry their numeric values directly. Categorical
/// features carry dictionary codes, so token equality is code equality.
struct TimedSeries {
  std::vector<Instant> timestamps;
  std::vector<double> values;
  std::shared_ptr<const CategoryDictionary> categories;

  std::size_t size() const noexcept { return values.size(); }
  bool categorical() const noexcept { return categories != nullptr; }

  std::size_t missing_count() const noexcept {
    std::size_t n = 0;
    for (double v : values) n += is_missing(v) ? 1 : 0;
    return n;
  }

  /// Non-missing values in time order.
  std::vector<double> present_values() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values)
      if (!is_missing(v)) out.push_back(v);
    return out;
  }

  const std::string& token(double code) const { return categories->tokens.at(static_cast<std::size_t>(code)); }
};

}  // namespace sixvs
