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

#include "sixvs/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sixvs {
namespace {

// Position of the quantile in 0-based order statistics.
struct Position {
  std::size_t lo;
  std::size_t hi;
  double frac;
};

Position locate(std::size_t n, double p) {
  const double h = (static_cast<double>(n) - 1.0) * std::clamp(p, 0.0, 1.0);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, n - 1);
  return {lo, hi, h - static_cast<double>(lo)};
}

double combine(double a, double b, double frac, QuantileMethod method) {
  switch (method) {
    case QuantileMethod::linear: return frac == 0.0 ? a : a + (b - a) * frac;
    case QuantileMethod::lower: return a;
    case QuantileMethod::higher: return frac == 0.0 ? a : b;
    case QuantileMethod::nearest: {
      // Round half to even on the fractional index, as numpy does.
      if (frac < 0.5) return a;
      if (frac > 0.5) return b;
      return a;  // resolved by caller for the even/odd rule
    }
    case QuantileMethod::midpoint: return frac == 0.0 ? a : 0.5 * (a + b);
  }
  return a;
}

double nearest_half(double a, double b, std::size_t lo) { return lo % 2 == 0 ? a : b; }

}  // namespace

double quantile_sorted(std::span<const double> sorted, double p, QuantileMethod method) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
  const Position pos = locate(sorted.size(), p);
  const double a = sorted[pos.lo];
  const double b = sorted[pos.hi];
  if (method == QuantileMethod::nearest && pos.frac == 0.5) return nearest_half(a, b, pos.lo);
  return combine(a, b, pos.frac, method);
}

double quantile_select(std::span<double> data, double p, QuantileMethod method) {
  if (data.empty()) throw std::invalid_argument("quantile of empty data");
  const Position pos = locate(data.size(), p);
  auto lo_it = data.begin() + static_cast<std::ptrdiff_t>(pos.lo);
  std::nth_element(data.begin(), lo_it, data.end());
  const double a = *lo_it;
  double b = a;
  if (pos.hi != pos.lo) b = *std::min_element(lo_it + 1, data.end());
  if (method == QuantileMethod::nearest && pos.frac == 0.5) return nearest_half(a, b, pos.lo);
  return combine(a, b, pos.frac, method);
}

Moments central_moments(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("moments of empty data");
  const double n = static_cast<double>(values.size());
  Moments m;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) {
    // Exactly constant data; summation error must not invent a spread.
    m.mean = *lo;
    return m;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - m.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  m.variance = m2;
  m.std = std::sqrt(m2);
  if (m2 > 0.0) {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  return m;
}

}  // namespace sixvs
