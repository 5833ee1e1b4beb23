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

#include "sixvs/timestamp_analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "sixvs/errors.hpp"

namespace sixvs {
namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Instant round_to_interval(Instant t, Duration interval) {
  const long long iv = interval.count();
  const long long us = t.time_since_epoch().count();
  long long q = floor_div(us, iv);
  const long long r = us - q * iv;
  if (2 * r > iv) ++q;
  return Instant{Duration{q * iv}};
}

}  // namespace

double merge_values(std::vector<double> values, MergePolicy policy, bool categorical) {
  std::erase_if(values, [](double v) { return is_missing(v); });
  if (values.empty()) return kMissing;
  if (categorical || policy == MergePolicy::first) return values.front();
  if (policy == MergePolicy::mean) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

DuplicateReport detect_duplicates(const TimedSeries& s) {
  DuplicateReport report;
  const auto& ts = s.timestamps;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i + 1;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    if (j - i >= 2) {
      DuplicateGroup g;
      g.timestamp = ts[i];
      std::optional<double> reference;
      for (std::size_t k = i; k < j; ++k) {
        g.rows.push_back(k);
        const double v = s.values[k];
        if (is_missing(v)) continue;
        if (!reference) reference = v;
        else if (*reference != v) g.same_value = false;
      }
      (g.same_value ? report.dts : report.dtd) += 1;
      report.groups.push_back(std::move(g));
    }
    i = j;
  }
  return report;
}

TimedSeries resolve_duplicates(const TimedSeries& s, const DuplicateReport& report, MergePolicy policy,
                               std::vector<Resolution>* log) {
  TimedSeries out;
  out.categories = s.categories;
  out.timestamps.reserve(s.size());
  out.values.reserve(s.size());
  std::size_t next_group = 0;
  const auto& ts = s.timestamps;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i + 1;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    if (j - i == 1) {
      out.timestamps.push_back(ts[i]);
      out.values.push_back(s.values[i]);
      i = j;
      continue;
    }
    if (next_group >= report.groups.size() || report.groups[next_group].timestamp != ts[i])
      throw std::invalid_argument("duplicate report does not match the series");
    const DuplicateGroup& g = report.groups[next_group++];
    std::vector<double> group(s.values.begin() + static_cast<std::ptrdiff_t>(i),
                              s.values.begin() + static_cast<std::ptrdiff_t>(j));
    const double chosen = merge_values(std::move(group), g.same_value ? MergePolicy::first : policy, s.categorical());
    out.timestamps.push_back(ts[i]);
    out.values.push_back(chosen);
    if (log) {
      Resolution r{ts[i], j - i, g.same_value, chosen, std::nullopt};
      if (s.categorical() && !is_missing(chosen)) r.token = s.token(chosen);
      log->push_back(std::move(r));
    }
    i = j;
  }
  return out;
}

IntervalReport interval_analysis(const TimedSeries& s, Duration expected, Duration tolerance) {
  IntervalReport r;
  r.expected = expected;
  const auto& ts = s.timestamps;
  if (ts.size() < 2) return r;
  r.total_intervals = ts.size() - 1;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Duration dt = ts[i + 1] - ts[i];
    const Duration dev = dt > expected ? dt - expected : expected - dt;
    if (dev <= tolerance) ++r.normal_intervals;
    else r.irregular_positions.push_back(i);
  }
  r.pti = static_cast<double>(r.normal_intervals) / static_cast<double>(r.total_intervals);
  return r;
}

RegularGrid build_grid(Instant start, Instant end, Duration interval) {
  if (interval.count() <= 0) throw ConfigError("grid interval must be > 0");
  if (start > end) throw ConfigError("grid start must not exceed grid end");
  RegularGrid g;
  g.start = start;
  g.end = end;
  g.interval = interval;
  g.slots = static_cast<std::size_t>((end - start) / interval) + 1;
  return g;
}

RegularGrid default_grid(Instant first, Instant last, Duration interval, std::optional<Instant> start_override,
                         std::optional<Instant> end_override) {
  if (interval.count() <= 0) throw ConfigError("grid interval must be > 0");
  const Instant start = start_override ? *start_override : round_to_interval(first, interval);
  Instant end = end_override ? *end_override : round_to_interval(last, interval);
  if (end < start) end = start;
  return build_grid(start, end, interval);
}

AlignmentResult align_to_grid(const TimedSeries& s, const RegularGrid& grid, MergePolicy conflict_policy) {
  AlignmentResult result;
  TimedSeries& out = result.series;
  out.categories = s.categories;
  out.timestamps.resize(grid.slots);
  out.values.assign(grid.slots, kMissing);
  for (std::size_t k = 0; k < grid.slots; ++k) out.timestamps[k] = grid.at(k);
  if (grid.slots == 0) {
    result.dropped = s.size();
    return result;
  }

  const long long iv = grid.interval.count();
  const long long span = (grid.end - grid.start).count();
  std::vector<std::size_t> slot_of(s.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const long long offset = (s.timestamps[i] - grid.start).count();
    if (2 * offset < -iv || 2 * (offset - span) > iv) {
      ++result.dropped;
      continue;
    }
    long long q = floor_div(offset, iv);
    const long long r = offset - q * iv;
    if (2 * r > iv) ++q;
    q = std::clamp<long long>(q, 0, static_cast<long long>(grid.slots) - 1);
    slot_of[i] = static_cast<std::size_t>(q);
    ++result.assigned;
  }

  // Timestamps are sorted, so entries for one slot are contiguous among the kept ones.
  std::vector<double> bucket;
  std::size_t current = static_cast<std::size_t>(-1);
  auto flush = [&] {
    if (current == static_cast<std::size_t>(-1)) return;
    std::size_t present = 0;
    for (double v : bucket) present += is_missing(v) ? 0 : 1;
    if (present > 1) ++result.merged_slots;
    out.values[current] = merge_values(bucket, conflict_policy, s.categorical());
    bucket.clear();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (slot_of[i] == static_cast<std::size_t>(-1)) continue;
    if (slot_of[i] != current) {
      flush();
      current = slot_of[i];
    }
    bucket.push_back(s.values[i]);
  }
  flush();
  return result;
}

}  // namespace sixvs
