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

#include "sixvs/feature_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sixvs/parallel.hpp"

namespace sixvs {
namespace {

// Present values shifted by their mean, missing entries set to 0. An exactly
// constant series becomes exact zeros.
struct Centered {
  std::vector<double> v;
  std::vector<std::size_t> missing;
  // Sums of v, v^2 and presence over the first / last j entries, j <= K.
  std::vector<double> head1, head2, tail1, tail2;
  std::vector<std::size_t> head_n, tail_n;
  double sum1 = 0, sum2 = 0;
  std::size_t present = 0;
};

Centered center(const TimedSeries& s, std::size_t K) {
  Centered c;
  const auto& x = s.values;
  const std::size_t n = x.size();
  double sum = 0.0;
  double first = kMissing;
  bool constant = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_missing(x[i])) {
      c.missing.push_back(i);
      continue;
    }
    if (c.present == 0) first = x[i];
    else if (x[i] != first) constant = false;
    sum += x[i];
    ++c.present;
  }
  const double shift = c.present == 0 ? 0.0 : (constant ? first : sum / static_cast<double>(c.present));
  c.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.v[i] = is_missing(x[i]) ? 0.0 : x[i] - shift;
    c.sum1 += c.v[i];
    c.sum2 += c.v[i] * c.v[i];
  }
  const std::size_t m = std::min(K, n);
  c.head1.assign(m + 1, 0.0);
  c.head2.assign(m + 1, 0.0);
  c.tail1.assign(m + 1, 0.0);
  c.tail2.assign(m + 1, 0.0);
  c.head_n.assign(m + 1, 0);
  c.tail_n.assign(m + 1, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t h = j - 1, t = n - j;
    c.head1[j] = c.head1[j - 1] + c.v[h];
    c.head2[j] = c.head2[j - 1] + c.v[h] * c.v[h];
    c.head_n[j] = c.head_n[j - 1] + (is_missing(x[h]) ? 0 : 1);
    c.tail1[j] = c.tail1[j - 1] + c.v[t];
    c.tail2[j] = c.tail2[j - 1] + c.v[t] * c.v[t];
    c.tail_n[j] = c.tail_n[j - 1] + (is_missing(x[t]) ? 0 : 1);
  }
  return c;
}

double dot(const double* a, const double* b, std::size_t n) {
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

// sum_t x_t * y_{t+k} for k in [-K, K], walked in blocks of t so the y window
// stays in cache across lags.
std::vector<double> lagged_products(const std::vector<double>& x, const std::vector<double>& y, long long K) {
  constexpr long long kBlock = 2048;
  const long long n = static_cast<long long>(x.size());
  std::vector<double> out(static_cast<std::size_t>(2 * K + 1), 0.0);
  for (long long b = 0; b < n; b += kBlock) {
    const long long e = std::min(n, b + kBlock);
    for (long long k = -K; k <= K; ++k) {
      const long long lo = std::max(b, -k);
      const long long hi = std::min(e, n - k);
      if (lo >= hi) continue;
      out[static_cast<std::size_t>(k + K)] +=
          dot(x.data() + lo, y.data() + lo + k, static_cast<std::size_t>(hi - lo));
    }
  }
  return out;
}

// Pairs (x_t, y_{t+k}); both inputs span the same n positions and |k| <= K.
std::optional<double> pearson_at(const Centered& x, const Centered& y, long long k, double sxy) {
  const long long n = static_cast<long long>(x.v.size());
  const std::size_t j = static_cast<std::size_t>(k < 0 ? -k : k);
  if (static_cast<long long>(j) >= n) return std::nullopt;
  // Overlap ranges: x over [t0, t0 + len), y over [t0 + k, ...).
  double sx, sxx, sy, syy;
  long long count;
  if (k >= 0) {
    sx = x.sum1 - x.tail1[j];
    sxx = x.sum2 - x.tail2[j];
    count = static_cast<long long>(x.present - x.tail_n[j]);
    sy = y.sum1 - y.head1[j];
    syy = y.sum2 - y.head2[j];
  } else {
    sx = x.sum1 - x.head1[j];
    sxx = x.sum2 - x.head2[j];
    count = static_cast<long long>(x.present - x.head_n[j]);
    sy = y.sum1 - y.tail1[j];
    syy = y.sum2 - y.tail2[j];
  }
  // Drop pairs whose partner is missing.
  for (std::size_t u : y.missing) {
    const long long t = static_cast<long long>(u) - k;
    if (t < 0 || t >= n) continue;
    const double a = x.v[static_cast<std::size_t>(t)];
    sx -= a;
    sxx -= a * a;
    if (!std::binary_search(x.missing.begin(), x.missing.end(), static_cast<std::size_t>(t))) --count;
  }
  for (std::size_t t : x.missing) {
    const long long u = static_cast<long long>(t) + k;
    if (u < 0 || u >= n) continue;
    const double b = y.v[static_cast<std::size_t>(u)];
    sy -= b;
    syy -= b * b;
  }
  if (count < 3) return std::nullopt;
  const double dn = static_cast<double>(count);
  const double vx = sxx - sx * sx / dn;
  const double vy = syy - sy * sy / dn;
  // Relative floor: a variance at rounding level of the raw sum is a constant overlap.
  if (!(vx > 1e-12 * sxx) || !(vy > 1e-12 * syy)) return std::nullopt;
  const double r = (sxy - sx * sy / dn) / (std::sqrt(vx) * std::sqrt(vy));
  return std::clamp(r, -1.0, 1.0);
}

CrossCorrelationResult best_of(const std::vector<std::optional<double>>& r, std::size_t max_lag,
                               CorrelationMode mode) {
  CrossCorrelationResult out;
  const long long K = static_cast<long long>(max_lag);
  auto score = [&](double v) { return mode == CorrelationMode::signed_max ? v : std::abs(v); };
  // Visit 0, -1, +1, -2, +2, ... so the first strict maximum honours the tie
  // rule. Values within kTie of each other count as tied, since lags with equal
  // correlation can differ in the last bits.
  constexpr double kTie = 1e-12;
  std::vector<long long> order{0};
  for (long long m = 1; m <= K; ++m) {
    order.push_back(-m);
    order.push_back(m);
  }
  for (long long k : order) {
    const auto& v = r[static_cast<std::size_t>(k + K)];
    if (!v) continue;
    if (!out.best_value || score(*v) > score(*out.best_value) + kTie) {
      out.best_value = *v;
      out.best_lag = k;
    }
  }
  return out;
}

}  // namespace

std::vector<std::optional<double>> lagged_correlations(const TimedSeries& x, const TimedSeries& y,
                                                       std::size_t max_lag) {
  if (x.size() != y.size()) throw std::invalid_argument("lagged correlation needs series on one grid");
  const Centered cx = center(x, max_lag);
  const Centered cy = center(y, max_lag);
  const long long K = static_cast<long long>(max_lag);
  std::vector<std::optional<double>> out(2 * max_lag + 1);
  const std::vector<double> sxy = lagged_products(cx.v, cy.v, K);
  for (long long k = -K; k <= K; ++k) {
    const auto i = static_cast<std::size_t>(k + K);
    out[i] = pearson_at(cx, cy, k, sxy[i]);
  }
  return out;
}

CrossCorrelationResult cross_correlation(const TimedSeries& x, const TimedSeries& y, Duration max_delay,
                                         Duration interval, CorrelationMode mode) {
  const std::size_t K = interval.count() > 0 ? static_cast<std::size_t>(max_delay / interval) : 0;
  return best_of(lagged_correlations(x, y, K), K, mode);
}

CorrelationMatrix::CorrelationMatrix(std::vector<std::string> features, std::vector<CrossCorrelationResult> pairs,
                                     std::vector<CrossCorrelationResult> diagonal)
    : features_(std::move(features)), pairs_(std::move(pairs)), diagonal_(std::move(diagonal)) {}

std::optional<CrossCorrelationResult> CorrelationMatrix::entry(std::string_view a, std::string_view b) const {
  if (a == b) {
    for (const auto& d : diagonal_)
      if (d.feature_a == a) return d;
    return std::nullopt;
  }
  for (const auto& p : pairs_) {
    if (p.feature_a == a && p.feature_b == b) return p;
    if (p.feature_a == b && p.feature_b == a) {
      CrossCorrelationResult flipped = p;
      std::swap(flipped.feature_a, flipped.feature_b);
      flipped.best_lag = -p.best_lag;
      return flipped;
    }
  }
  return std::nullopt;
}

CorrelationMatrix correlation_matrix(const Dataset& aligned, Duration max_delay, Duration interval,
                                     CorrelationMode mode) {
  std::vector<const Feature*> numeric;
  for (const auto& f : aligned.features)
    if (f.schema.kind == FeatureKind::continuous) numeric.push_back(&f);

  std::vector<std::string> names;
  for (const auto* f : numeric) names.push_back(f->schema.name);

  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t i = 0; i < numeric.size(); ++i)
    for (std::size_t j = i + 1; j < numeric.size(); ++j) index.emplace_back(i, j);

  std::vector<CrossCorrelationResult> pairs(index.size());
  detail::parallel_for(index.size(), [&](std::size_t p) {
    const auto [i, j] = index[p];
    pairs[p] = cross_correlation(numeric[i]->series, numeric[j]->series, max_delay, interval, mode);
    pairs[p].feature_a = names[i];
    pairs[p].feature_b = names[j];
  });

  std::vector<CrossCorrelationResult> diagonal(numeric.size());
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    diagonal[i] = best_of(lagged_correlations(numeric[i]->series, numeric[i]->series, 0), 0, mode);
    diagonal[i].feature_a = diagonal[i].feature_b = names[i];
  }
  return CorrelationMatrix(std::move(names), std::move(pairs), std::move(diagonal));
}

std::vector<double> recompute_pmv(const Dataset& aligned) {
  std::vector<double> out;
  out.reserve(aligned.nf());
  for (const auto& f : aligned.features) {
    const std::size_t n = f.series.size();
    out.push_back(n == 0 ? 0.0 : static_cast<double>(f.series.missing_count()) / static_cast<double>(n));
  }
  return out;
}

}  // namespace sixvs
