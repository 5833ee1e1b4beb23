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
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sixvs/scoring.hpp"
#include "support/oracles.hpp"
#include "support/series.hpp"

namespace sixvs {
namespace {

using namespace std::chrono;
using testing::regular;

const std::array<double, 4> kQuarter{0.25, 0.25, 0.25, 0.25};
const std::array<double, 3> kThird{1.0 / 3, 1.0 / 3, 1.0 / 3};

TEST(Volume, Products) {
  EXPECT_EQ(score_volume(10, 43523), 435230u);
  EXPECT_EQ(score_volume(7, 1624430), 11371010u);
  EXPECT_EQ(score_volume(0, 1624430), 0u);
  EXPECT_THROW(score_volume(std::numeric_limits<unsigned long long>::max(), 2), std::overflow_error);
}

TEST(Volume, MatchesBigIntegerOracle) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<unsigned long long> d(0, 1'000'000'000ULL);
  for (int i = 0; i < 2000; ++i) {
    const auto a = d(rng), b = d(rng);
    EXPECT_EQ(std::to_string(score_volume(a, b)), oracle::multiply(std::to_string(a), std::to_string(b)));
  }
}

TEST(Variety, Ratios) {
  EXPECT_TRUE(std::isinf(score_variety({1.0, 0.0, 0.0})));
  EXPECT_DOUBLE_EQ(score_variety({0.5, 0.25, 0.25}), 1.0);
  EXPECT_DOUBLE_EQ(score_variety({0.9, 0.1, 0.0}), 9.0);
  EXPECT_GE(score_variety({0.0, 1.0, 0.0}), 0.0);
}

TEST(Velocity, PassThrough) {
  ProfilerConfig c;
  c.expected_interval = 500ms;
  EXPECT_EQ(score_velocity(c), 500ms);
  c.expected_interval = 10s;
  EXPECT_EQ(score_velocity(c), 10s);
}

TEST(Veracity, PerfectDataIsZero) {
  EXPECT_EQ(score_veracity(1.0, 0.0, 1000, 1.0, 0.0, kQuarter), 0.0);
}

TEST(Veracity, UndefinedForTinyDatasets) {
  EXPECT_FALSE(score_veracity(1.0, 0.0, 2, 1.0, 0.0, kQuarter).has_value());
  EXPECT_TRUE(score_veracity(1.0, 0.0, 3, 1.0, 0.0, kQuarter).has_value());
}

TEST(Veracity, Terms) {
  const auto t = veracity_terms(0.75, 5.0, 12, 0.9, 0.2);
  ASSERT_TRUE(t.has_value());
  EXPECT_DOUBLE_EQ(t->format, 0.25);
  EXPECT_DOUBLE_EQ(t->spikes, 0.5);
  EXPECT_NEAR(t->intervals, 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(t->missing, 0.2);
  EXPECT_NEAR(*score_veracity(0.75, 5.0, 12, 0.9, 0.2, kQuarter), (0.25 + 0.5 + 0.1 + 0.2) / 4, 1e-15);
}

TEST(Veracity, RangeMonotonicityAndZero) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 500; ++i) {
    const double pcdf = u(rng), pti = u(rng), pmv = u(rng) * 0.9;
    const unsigned long long ni = 3 + rng() % 1000;
    const double nas = u(rng) * static_cast<double>(ni - 2);
    const double v = *score_veracity(pcdf, nas, ni, pti, pmv, kQuarter);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_GT(*score_veracity(pcdf, nas, ni, pti, pmv + 0.05, kQuarter), v);
  }
  EXPECT_GT(*score_veracity(1.0, 0.0, 100, 1.0, 1e-9, kQuarter), 0.0);
  EXPECT_GT(*score_veracity(1.0, 1.0, 100, 1.0, 0.0, kQuarter), 0.0);
}

ProfilerConfig slot_config() {
  ProfilerConfig c;
  c.expected_interval = 1s;
  c.seasonal_periods = {4};
  c.max_acf_lag = 3;
  return c;
}

TEST(Value, AllDefinedIsZero) {
  std::vector<IndicatorSlot> slots;
  std::mt19937_64 rng(3);
  for (int f = 0; f < 3; ++f) {
    std::vector<double> v(40);
    for (auto& x : v) x = static_cast<double>(rng() % 100);
    const auto s = indicator_slots("f" + std::to_string(f), continuous_profile(regular(v), slot_config()));
    slots.insert(slots.end(), s.begin(), s.end());
  }
  EXPECT_EQ(slots.size(), 3 * continuous_factors().size());
  EXPECT_EQ(score_value(slots), 0.0);
}

TEST(Value, OneConstantAmongTen) {
  std::vector<IndicatorSlot> slots;
  std::mt19937_64 rng(4);
  for (int f = 0; f < 10; ++f) {
    std::vector<double> v(40, 5.0);
    if (f != 6)
      for (auto& x : v) x = static_cast<double>(rng() % 100);
    const auto s = indicator_slots("f" + std::to_string(f), continuous_profile(regular(v), slot_config()));
    slots.insert(slots.end(), s.begin(), s.end());
  }
  ASSERT_EQ(continuous_factors().size(), 13u);
  EXPECT_DOUBLE_EQ(*score_value(slots), 3.0 / 130.0);
  std::vector<std::string> invalid;
  for (const auto& s : slots)
    if (!s.valid) invalid.push_back(s.factor);
  EXPECT_EQ(invalid, (std::vector<std::string>{"skewness", "excess_kurtosis", "acf"}));
}

TEST(Value, CategoricalAndEmpty) {
  const auto p = categorical_profile(testing::categories({"a", "b", "a", "a", "b", "a", "b", "b", "a", "a"}),
                                     slot_config());
  const auto slots = indicator_slots("m", p);
  EXPECT_EQ(slots.size(), categorical_factors().size());
  EXPECT_FALSE(score_value(std::vector<IndicatorSlot>{}).has_value());
  const auto empty = indicator_slots("e", continuous_profile(regular({kMissing, kMissing}), slot_config()));
  EXPECT_EQ(*score_value(empty), 1.0);
}

TEST(Variability, ZeroCase) {
  const std::vector<double> stds{2, 2, 2}, rates{0, 0, 0};
  const std::vector<std::optional<double>> pairs{0.9, 0.8, 0.95};
  const auto v = score_variability(stds, rates, pairs, 0.7, kThird);
  EXPECT_EQ(*v.nstd, 0.0);
  EXPECT_EQ(v.po, 0.0);
  EXPECT_EQ(*v.vc, 1.0);
  EXPECT_NEAR(*v.varia, 0.0, 1e-15);
}

TEST(Variability, Components) {
  const std::vector<double> stds{1, 3, 5}, rates{0.1, 0.2, 0.3};
  const std::vector<std::optional<double>> pairs{0.9, std::nullopt, 0.1, 0.7};
  const auto v = score_variability(stds, rates, pairs, 0.7, kThird);
  EXPECT_DOUBLE_EQ(*v.nstd, 0.5);
  EXPECT_DOUBLE_EQ(v.po, 0.2);
  EXPECT_EQ(v.defined_pairs, 3u);
  EXPECT_EQ(v.high_pairs, 1u);
  EXPECT_NEAR(*v.varia, (0.5 + 0.2 + (1 - 1.0 / 3)) / 3, 1e-15);
}

TEST(Variability, NoDefinedPairs) {
  const std::vector<double> stds{1, 2}, rates{0, 0};
  const std::vector<std::optional<double>> pairs{std::nullopt};
  const auto v = score_variability(stds, rates, pairs, 0.7, kThird);
  EXPECT_FALSE(v.vc.has_value());
  EXPECT_FALSE(v.varia.has_value());
}

TEST(Variability, NstdScaleInvariance) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 50);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> stds(2 + rng() % 10);
    for (auto& s : stds) s = u(rng);
    const double c = u(rng);
    std::vector<double> scaled(stds);
    for (auto& s : scaled) s *= c;
    EXPECT_NEAR(*normalized_std(stds), *normalized_std(scaled), 1e-12);
  }
}

TEST(Variability, RangeAndMonotoneInVc) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> stds(5), rates(5);
    for (auto& s : stds) s = u(rng) * 10;
    for (auto& r : rates) r = u(rng) * 0.5;
    std::vector<std::optional<double>> pairs(10);
    for (auto& p : pairs) p = u(rng) * 0.6;
    const auto lo = score_variability(stds, rates, pairs, 0.7, kThird);
    pairs[3] = 0.95;
    const auto hi = score_variability(stds, rates, pairs, 0.7, kThird);
    EXPECT_GE(*lo.varia, 0.0);
    EXPECT_LE(*lo.varia, 1.0);
    EXPECT_LT(*hi.varia, *lo.varia);
  }
}

TEST(Variability, ZeroOnlyWhenAllComponentsAre) {
  const std::vector<double> stds{1, 2}, rates{0, 0};
  const std::vector<std::optional<double>> high{0.9}, low{0.1};
  EXPECT_GT(*score_variability(stds, rates, high, 0.7, kThird).varia, 0.0);
  EXPECT_GT(*score_variability(std::vector<double>{1, 1}, rates, low, 0.7, kThird).varia, 0.0);
}

}  // namespace
}  // namespace sixvs
