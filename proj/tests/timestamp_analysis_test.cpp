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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include "sixvs/errors.hpp"
#include "sixvs/timestamp_analysis.hpp"
#include "support/series.hpp"

namespace sixvs {
namespace {

using namespace std::chrono;
using testing::at;
using testing::categories;
using testing::regular;
using testing::series;

bool same_values(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i] || (std::isnan(a[i]) && std::isnan(b[i])))) return false;
  return true;
}

TEST(Duplicates, SameValueGroup) {
  const auto r = detect_duplicates(series({1, 1, 2}, {5, 5, 7}));
  EXPECT_EQ(r.dts, 1u);
  EXPECT_EQ(r.dtd, 0u);
  ASSERT_EQ(r.groups.size(), 1u);
  EXPECT_EQ(r.groups[0].rows, (std::vector<std::size_t>{0, 1}));
}

TEST(Duplicates, DifferingGroup) {
  const auto r = detect_duplicates(series({1, 1}, {5, 6}));
  EXPECT_EQ(r.dts, 0u);
  EXPECT_EQ(r.dtd, 1u);
}

TEST(Duplicates, ResolveIdentityOnSameValue) {
  const auto s = series({1, 1}, {5, 5});
  for (auto p : {MergePolicy::first, MergePolicy::mean, MergePolicy::median}) {
    const auto out = resolve_duplicates(s, detect_duplicates(s), p);
    EXPECT_EQ(out.values, std::vector<double>{5});
    EXPECT_EQ(out.timestamps, std::vector<Instant>{at(1)});
  }
}

TEST(Duplicates, ResolveMeanAndMedian) {
  const auto a = series({1, 1}, {4, 8});
  EXPECT_EQ(resolve_duplicates(a, detect_duplicates(a), MergePolicy::mean).values, std::vector<double>{6});
  const auto b = series({1, 1, 1}, {1, 2, 9});
  EXPECT_EQ(resolve_duplicates(b, detect_duplicates(b), MergePolicy::median).values, std::vector<double>{2});
  EXPECT_EQ(resolve_duplicates(b, detect_duplicates(b), MergePolicy::first).values, std::vector<double>{1});
}

TEST(Duplicates, AllMissingGroupCollapsesToMissing) {
  const auto s = series({1, 1, 2}, {kMissing, kMissing, 3});
  const auto out = resolve_duplicates(s, detect_duplicates(s), MergePolicy::median);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(is_missing(out.values[0]));
}

TEST(Duplicates, ResolutionLogAndCategoricalToken) {
  auto s = categories({"on", "off", "on"});
  s.timestamps = {at(0), at(0), at(1)};
  std::vector<Resolution> log;
  const auto out = resolve_duplicates(s, detect_duplicates(s), MergePolicy::median, &log);
  ASSERT_EQ(log.size(), 1u);
  EXPECT_FALSE(log[0].same_value);
  EXPECT_EQ(log[0].rows, 2u);
  ASSERT_TRUE(log[0].token.has_value());
  EXPECT_EQ(*log[0].token, "on");
  EXPECT_EQ(out.token(out.values[0]), "on");
}

TEST(Duplicates, ResolveIsIdempotentAndClean) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> secs, vals;
    double t = 0;
    for (int i = 0; i < 60; ++i) {
      t += static_cast<double>(rng() % 3);
      secs.push_back(t);
      vals.push_back(rng() % 5 == 0 ? kMissing : static_cast<double>(rng() % 4));
    }
    const auto s = series(secs, vals);
    const auto once = resolve_duplicates(s, detect_duplicates(s), MergePolicy::median);
    const auto report = detect_duplicates(once);
    EXPECT_EQ(report.dts + report.dtd, 0u);
    const auto twice = resolve_duplicates(once, report, MergePolicy::median);
    EXPECT_EQ(twice.timestamps, once.timestamps);
    EXPECT_TRUE(same_values(twice.values, once.values));
    const auto groups = detect_duplicates(s);
    EXPECT_EQ(groups.dts + groups.dtd, groups.groups.size());
  }
}

TEST(Intervals, AllRegular) {
  const auto r = interval_analysis(series({0, 10, 20, 30}, {1, 1, 1, 1}), 10s, 0s);
  ASSERT_TRUE(r.pti.has_value());
  EXPECT_DOUBLE_EQ(*r.pti, 1.0);
  EXPECT_TRUE(r.irregular_positions.empty());
}

TEST(Intervals, TwoOfThree) {
  const auto r = interval_analysis(series({0, 10, 25, 35}, {1, 1, 1, 1}), 10s, 0s);
  EXPECT_EQ(r.total_intervals, 3u);
  EXPECT_EQ(r.normal_intervals, 2u);
  EXPECT_DOUBLE_EQ(*r.pti, 2.0 / 3.0);
  EXPECT_EQ(r.irregular_positions, std::vector<std::size_t>{1});
}

TEST(Intervals, ToleranceAndShortSeries) {
  const auto r = interval_analysis(series({0, 10, 21, 31}, {1, 1, 1, 1}), 10s, 1s);
  EXPECT_DOUBLE_EQ(*r.pti, 1.0);
  EXPECT_FALSE(interval_analysis(series({0}, {1}), 10s, 0s).pti.has_value());
}

TEST(Grid, Slots) {
  const auto g = build_grid(at(0), at(30), 10s);
  EXPECT_EQ(g.slots, 4u);
  EXPECT_EQ(g.at(3), at(30));
  EXPECT_EQ(build_grid(at(5), at(5), 10s).slots, 1u);
  const auto f = build_grid(at(0), at(35), 10s);
  EXPECT_EQ(f.slots, 4u);
  EXPECT_EQ(f.at(f.slots - 1), at(30));
}

TEST(Grid, Errors) {
  EXPECT_THROW(build_grid(at(0), at(30), 0s), ConfigError);
  EXPECT_THROW(build_grid(at(30), at(0), 10s), ConfigError);
}

TEST(Grid, DefaultRoundsToInterval) {
  const auto g = default_grid(at(3), at(27), 10s, std::nullopt, std::nullopt);
  EXPECT_EQ(g.start, at(0));
  EXPECT_EQ(g.end, at(30));
  const auto o = default_grid(at(3), at(27), 10s, at(10), std::nullopt);
  EXPECT_EQ(o.start, at(10));
}

TEST(Align, NearestSlot) {
  const auto g = build_grid(at(0), at(20), 10s);
  const auto r = align_to_grid(series({0, 10.4, 19.8}, {1, 2, 3}), g, MergePolicy::median);
  EXPECT_EQ(r.series.values, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(r.assigned, 3u);
  EXPECT_EQ(r.dropped, 0u);
}

TEST(Align, MergesConflicts) {
  const auto g = build_grid(at(0), at(20), 10s);
  const auto r = align_to_grid(series({9.6, 10.4}, {2, 4}), g, MergePolicy::mean);
  ASSERT_EQ(r.series.size(), 3u);
  EXPECT_TRUE(is_missing(r.series.values[0]));
  EXPECT_DOUBLE_EQ(r.series.values[1], 3.0);
  EXPECT_TRUE(is_missing(r.series.values[2]));
  EXPECT_EQ(r.merged_slots, 1u);
}

TEST(Align, MidpointGoesToEarlierSlot) {
  const auto g = build_grid(at(0), at(20), 10s);
  const auto r = align_to_grid(series({5}, {7}), g, MergePolicy::mean);
  EXPECT_EQ(r.series.values[0], 7);
  EXPECT_TRUE(is_missing(r.series.values[1]));
}

TEST(Align, DropsOutOfRange) {
  const auto g = build_grid(at(0), at(20), 10s);
  const auto r = align_to_grid(series({-6, 0, 25, 26}, {1, 2, 3, 4}), g, MergePolicy::mean);
  EXPECT_EQ(r.dropped, 2u);
  EXPECT_EQ(r.assigned, 2u);
  EXPECT_EQ(r.series.values[2], 3);
}

TEST(Align, AlignedSeriesIsIdentity) {
  const auto g = build_grid(at(0), at(40), 10s);
  const auto s = series({0, 10, 20, 30, 40}, {1, kMissing, 3, 4, 5});
  const auto r = align_to_grid(s, g, MergePolicy::median);
  EXPECT_EQ(r.series.timestamps, s.timestamps);
  EXPECT_TRUE(same_values(r.series.values, s.values));
}

TEST(Align, ConservationAndGridTimestamps) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> when(-20.0, 120.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> secs(40);
    for (double& t : secs) t = std::round(when(rng) * 10) / 10;
    std::sort(secs.begin(), secs.end());
    std::vector<double> vals(secs.size(), 1.0);
    const auto g = build_grid(at(0), at(100), 10s);
    const auto r = align_to_grid(series(secs, vals), g, MergePolicy::first);
    EXPECT_EQ(r.assigned + r.dropped, secs.size());
    ASSERT_EQ(r.series.size(), g.slots);
    for (std::size_t i = 0; i < g.slots; ++i) EXPECT_EQ(r.series.timestamps[i], g.at(i));
  }
}

TEST(Merge, IgnoresMissing) {
  EXPECT_EQ(merge_values({kMissing, 2, 4}, MergePolicy::mean, false), 3);
  EXPECT_EQ(merge_values({kMissing, 2, 4}, MergePolicy::first, false), 2);
  EXPECT_TRUE(is_missing(merge_values({kMissing}, MergePolicy::median, false)));
  EXPECT_EQ(merge_values({1, 0, 0}, MergePolicy::mean, true), 1);
}

}  // namespace
}  // namespace sixvs
