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

#include <algorithm>
#include <cmath>

#include "sixvs/errors.hpp"
#include "sixvs/statistics.hpp"
#include "sixvs/value_analysis.hpp"

namespace sixvs {
namespace {

std::size_t longest_present_run(const std::vector<double>& x) {
  std::size_t best = 0, run = 0;
  for (double v : x) {
    run = is_missing(v) ? 0 : run + 1;
    best = std::max(best, run);
  }
  return best;
}

// Centered moving average; even periods use the 2 x period filter with half
// weights on both ends. Undefined wherever the window is incomplete.
std::vector<double> centered_trend(const std::vector<double>& x, std::size_t period) {
  const std::size_t n = x.size();
  std::vector<double> trend(n, kMissing);
  // Extended precision prefix sums keep long windows accurate.
  std::vector<long double> sum(n + 1, 0.0L);
  std::vector<std::size_t> gaps(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const bool miss = is_missing(x[i]);
    sum[i + 1] = sum[i] + (miss ? 0.0L : static_cast<long double>(x[i]));
    gaps[i + 1] = gaps[i] + (miss ? 1 : 0);
  }
  const std::size_t half = period / 2;
  if (n <= 2 * half) return trend;
  const bool even = period % 2 == 0;
  for (std::size_t t = half; t + half < n; ++t) {
    const std::size_t lo = t - half;
    const std::size_t hi = t + half;  // inclusive
    if (gaps[hi + 1] != gaps[lo]) continue;
    long double window = sum[hi + 1] - sum[lo];
    if (even) window -= 0.5L * (static_cast<long double>(x[lo]) + static_cast<long double>(x[hi]));
    trend[t] = static_cast<double>(window / static_cast<long double>(period));
  }
  return trend;
}

}  // namespace

DecompositionResult decompose(const TimedSeries& s, std::size_t period, DecompositionModel model) {
  if (period < 2) throw DecompositionUnavailable("seasonal period must be >= 2");
  const auto& x = s.values;
  if (longest_present_run(x) < 2 * period)
    throw DecompositionUnavailable("need " + std::to_string(2 * period) +
                                   " contiguous non-missing points for period " + std::to_string(period));
  const bool additive = model == DecompositionModel::additive;
  if (!additive && std::any_of(x.begin(), x.end(), [](double v) { return !is_missing(v) && v <= 0.0; }))
    throw DecompositionUnavailable("multiplicative decomposition requires strictly positive values");

  DecompositionResult r;
  r.model = model;
  r.period = period;
  r.trend = centered_trend(x, period);

  const std::size_t n = x.size();
  std::vector<double> phase_sum(period, 0.0);
  std::vector<std::size_t> phase_count(period, 0);
  for (std::size_t t = 0; t < n; ++t) {
    if (is_missing(r.trend[t]) || is_missing(x[t])) continue;
    if (!additive && r.trend[t] == 0.0) continue;
    phase_sum[t % period] += additive ? x[t] - r.trend[t] : x[t] / r.trend[t];
    ++phase_count[t % period];
  }
  std::vector<double> phase(period, additive ? 0.0 : 1.0);
  double level = 0.0;
  std::size_t filled = 0;
  for (std::size_t j = 0; j < period; ++j) {
    if (phase_count[j] == 0) continue;
    phase[j] = phase_sum[j] / static_cast<double>(phase_count[j]);
    level += phase[j];
    ++filled;
  }
  level /= static_cast<double>(std::max<std::size_t>(filled, 1));
  for (std::size_t j = 0; j < period; ++j) {
    if (phase_count[j] == 0) continue;
    phase[j] = additive ? phase[j] - level : phase[j] / level;
  }

  r.seasonal.assign(n, kMissing);
  r.residual.assign(n, kMissing);
  for (std::size_t t = 0; t < n; ++t) {
    if (is_missing(x[t])) continue;
    r.seasonal[t] = phase[t % period];
    if (is_missing(r.trend[t])) continue;
    r.residual[t] = additive ? x[t] - r.trend[t] - r.seasonal[t] : x[t] / (r.trend[t] * r.seasonal[t]);
  }
  return r;
}

SeasonalityResult detect_seasonality(const TimedSeries& s, std::span<const std::size_t> periods, double tolerance) {
  SeasonalityResult result;
  const std::vector<double> present = s.present_values();
  if (present.empty()) {
    result.low_confidence = true;
    return result;
  }
  const double spread = central_moments(present).std;
  bool any = false;
  for (std::size_t period : periods) {
    DecompositionResult d;
    try {
      d = decompose(s, period, DecompositionModel::additive);
    } catch (const DecompositionUnavailable&) {
      continue;
    }
    any = true;
    double lo = INFINITY, hi = -INFINITY;
    for (double v : d.seasonal) {
      if (is_missing(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double range = hi >= lo ? hi - lo : 0.0;
    const double strength = spread > 0.0 ? range / spread : 0.0;
    if (!result.strength || strength > *result.strength) {
      result.strength = strength;
      result.period = period;
    }
    if (range > tolerance * spread && spread > 0.0) result.seasonal = true;
  }
  result.low_confidence = !any;
  return result;
}

}  // namespace sixvs
