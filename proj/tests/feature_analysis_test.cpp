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

#include "sixvs/feature_analysis.hpp"
#include "support/oracles.hpp"
#include "support/series.hpp"

namespace sixvs {
namespace {

using namespace std::chrono;
using testing::continuous_feature;
using testing::regular;

std::vector<double> noise(std::size_t n, std::uint64_t seed, double missing_rate = 0.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0, 1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng) < missing_rate ? kMissing : d(rng);
  return v;
}

TEST(CrossCorrelation, Identity) {
  const auto x = regular(noise(200, 1));
  const auto r = cross_correlation(x, x, 10s, 1s);
  ASSERT_TRUE(r.best_value.has_value());
  EXPECT_NEAR(*r.best_value, 1.0, 1e-12);
  EXPECT_EQ(r.best_lag, 0);
}

TEST(CrossCorrelation, ShiftedCopy) {
  const auto base = noise(400, 2);
  std::vector<double> y(base.size(), kMissing);
  for (std::size_t t = 0; t + 5 < base.size(); ++t) y[t + 5] = base[t];
  const auto r = cross_correlation(regular(base), regular(y), 10s, 1s);
  EXPECT_NEAR(*r.best_value, 1.0, 1e-12);
  EXPECT_EQ(r.best_lag, 5);
  const auto back = cross_correlation(regular(y), regular(base), 10s, 1s);
  EXPECT_EQ(back.best_lag, -5);
}

TEST(CrossCorrelation, ConstantIsUndefined) {
  const auto r = cross_correlation(regular(std::vector<double>(50, 3.0)), regular(noise(50, 3)), 5s, 1s);
  EXPECT_FALSE(r.best_value.has_value());
}

TEST(CrossCorrelation, TooLittleOverlap) {
  const auto r = cross_correlation(regular({1, 2, kMissing, kMissing}), regular({kMissing, kMissing, 1, 2}), 1s, 1s);
  EXPECT_FALSE(r.best_value.has_value());
}

TEST(CrossCorrelation, TiesPreferSmallLagThenNegative) {
  // Period-2 signal: lags -2, 0 and +2 give identical correlation.
  std::vector<double> v(40);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i % 2 == 0 ? 1 : -1;
  const auto r = cross_correlation(regular(v), regular(v), 3s, 1s);
  EXPECT_EQ(r.best_lag, 0);
  std::vector<double> w(40);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = i % 2 == 0 ? -1 : 1;
  EXPECT_EQ(cross_correlation(regular(v), regular(w), 3s, 1s).best_lag, -1);
}

TEST(CrossCorrelation, AbsoluteMode) {
  const auto x = noise(100, 4);
  std::vector<double> y(x);
  for (auto& v : y) v = -v;
  const auto s = cross_correlation(regular(x), regular(y), 3s, 1s, CorrelationMode::signed_max);
  const auto a = cross_correlation(regular(x), regular(y), 3s, 1s, CorrelationMode::absolute_max);
  EXPECT_LT(*s.best_value, 0.5);
  EXPECT_NEAR(*a.best_value, -1.0, 1e-12);
  EXPECT_EQ(a.best_lag, 0);
}

TEST(CrossCorrelation, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto x = noise(120, 100 + seed, 0.1);
    auto y = noise(120, 200 + seed, 0.1);
    for (std::size_t t = 0; t + 2 < y.size(); ++t)
      if (!std::isnan(y[t + 2]) && !std::isnan(x[t])) y[t + 2] += 0.8 * x[t];
    const auto r = lagged_correlations(regular(x), regular(y), 6);
    for (long long k = -6; k <= 6; ++k) {
      const auto o = oracle::lagged_pearson(x, y, k);
      const auto& got = r[static_cast<std::size_t>(k + 6)];
      ASSERT_EQ(got.has_value(), o.has_value());
      if (o) EXPECT_TRUE(oracle::close(*got, *o));
    }
  }
}

TEST(CrossCorrelation, AffineInvariance) {
  const auto x = noise(150, 5, 0.05);
  const auto y = noise(150, 6, 0.05);
  std::vector<double> z(x);
  for (auto& v : z) v = 3.5 * v - 12;
  const auto a = lagged_correlations(regular(x), regular(y), 5);
  const auto b = lagged_correlations(regular(z), regular(y), 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].has_value(), b[i].has_value());
    if (a[i]) EXPECT_NEAR(*a[i], *b[i], 1e-9);
  }
}

TEST(CrossCorrelation, MismatchedLengthsThrow) {
  EXPECT_THROW(lagged_correlations(regular({1, 2, 3}), regular({1, 2}), 1), std::invalid_argument);
}

Dataset three_features() {
  const auto a = noise(300, 7);
  std::vector<double> b(a.size(), 0.0), c = noise(300, 8);
  for (std::size_t t = 0; t < a.size(); ++t) b[t] = t >= 3 ? a[t - 3] + 0.1 * c[t] : kMissing;
  return make_dataset("d", {continuous_feature("a", regular(a)), continuous_feature("b", regular(b)),
                            continuous_feature("c", regular(c))});
}

TEST(CorrelationMatrix, PairsAndSymmetry) {
  const auto m = correlation_matrix(three_features(), 5s, 1s);
  EXPECT_EQ(m.pairs().size(), 3u);
  const auto ab = m.entry("a", "b");
  const auto ba = m.entry("b", "a");
  ASSERT_TRUE(ab && ba);
  EXPECT_EQ(ab->best_value, ba->best_value);
  EXPECT_EQ(ab->best_lag, 3);
  EXPECT_EQ(ba->best_lag, -3);
  EXPECT_GT(*ab->best_value, 0.9);
  const auto aa = m.entry("a", "a");
  ASSERT_TRUE(aa && aa->best_value);
  EXPECT_DOUBLE_EQ(*aa->best_value, 1.0);
  EXPECT_EQ(aa->best_lag, 0);
  EXPECT_FALSE(m.entry("a", "zz").has_value());
}

TEST(CorrelationMatrix, TwoFeaturesOnePair) {
  const auto m = correlation_matrix(make_dataset("d", {continuous_feature("a", regular(noise(30, 1))),
                                                       continuous_feature("b", regular(noise(30, 2)))}),
                                    2s, 1s);
  EXPECT_EQ(m.pairs().size(), 1u);
}

TEST(CorrelationMatrix, SkipsCategorical) {
  auto ds = three_features();
  ds.features[2].schema.kind = FeatureKind::categorical;
  ds.features[2].series.categories = std::make_shared<CategoryDictionary>();
  EXPECT_EQ(correlation_matrix(ds, 5s, 1s).pairs().size(), 1u);
}

TEST(RecomputePmv, SlotCounting) {
  std::vector<double> v(10, 1.0);
  v[1] = v[4] = v[8] = kMissing;
  const auto pmv = recompute_pmv(make_dataset("d", {continuous_feature("a", regular(v)),
                                                    continuous_feature("b", regular(std::vector<double>(10, 2.0)))}));
  EXPECT_DOUBLE_EQ(pmv[0], 0.3);
  EXPECT_DOUBLE_EQ(pmv[1], 0.0);
}

}  // namespace
}  // namespace sixvs
