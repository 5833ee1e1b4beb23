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
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sixvs/config.hpp"
#include "sixvs/errors.hpp"
#include "sixvs/ingestion.hpp"
#include "sixvs/schema.hpp"
#include "sixvs/time.hpp"

namespace sixvs {
namespace {

using namespace std::chrono;
using nlohmann::json;

std::vector<FeatureSchema> two_floats() {
  return {{"a", FeatureKind::continuous, StorageFormat::floating, DataForm::structured},
          {"b", FeatureKind::continuous, StorageFormat::floating, DataForm::structured}};
}

Dataset load(const std::string& text, const std::vector<FeatureSchema>& schema, const ProfilerConfig& cfg = {}) {
  std::istringstream in(text);
  return load_dataset(in, schema, cfg);
}

TEST(ParseTimestamp, IsoSecond) {
  const Instant expected = sys_days{2023y / August / 7} + 6h + 36min + 15s;
  EXPECT_EQ(parse_timestamp("2023-08-07T06:36:15", {}), expected);
  EXPECT_EQ(render_timestamp(expected), "2023-08-07T06:36:15");
}

TEST(ParseTimestamp, IsoFractionAndSpaceSeparator) {
  const Instant t = parse_timestamp("2023-08-07 06:36:15.250", {});
  EXPECT_EQ(t, sys_days{2023y / August / 7} + 6h + 36min + 15s + 250ms);
}

TEST(ParseTimestamp, EpochSecondsZero) {
  EXPECT_EQ(parse_timestamp("0", {TimestampFormat::epoch_seconds, ""}), Instant{});
  EXPECT_EQ(parse_timestamp("1500", {TimestampFormat::epoch_milliseconds, ""}), Instant{} + 1500ms);
}

TEST(ParseTimestamp, CustomPattern) {
  const TimestampSpec spec{TimestampFormat::custom, "%d/%m/%Y %H:%M:%S"};
  EXPECT_EQ(parse_timestamp("07/08/2023 06:36:15", spec), sys_days{2023y / August / 7} + 6h + 36min + 15s);
}

TEST(ParseTimestamp, RejectsGarbageWithRow) {
  try {
    parse_timestamp("not-a-time", {}, 17);
    FAIL() << "expected FormatViolationError";
  } catch (const FormatViolationError& e) {
    EXPECT_EQ(e.row(), 17u);
  }
  EXPECT_FALSE(try_parse_timestamp("2023-13-01T00:00:00", {}).has_value());
  EXPECT_FALSE(try_parse_timestamp("", {}).has_value());
}

TEST(Schema, FromJsonAndBack) {
  const json doc = json::parse(R"({"features":[{"name":"x","kind":"categorical","expected_format":"category-text"}]})");
  const auto schema = schema_from_json(doc);
  ASSERT_EQ(schema.size(), 1u);
  EXPECT_EQ(schema[0].kind, FeatureKind::categorical);
  EXPECT_EQ(schema_from_json(json{{"features", json::array({to_json(schema[0])})}}), schema);
}

TEST(Schema, RejectsDuplicatesAndUnknownFields) {
  EXPECT_THROW(schema_from_json(json::parse(R"({"features":[{"name":"x"},{"name":"x"}]})")), SchemaError);
  EXPECT_THROW(schema_from_json(json::parse(R"({"features":[{"name":"x","unit":"C"}]})")), SchemaError);
  EXPECT_THROW(schema_from_json(json::parse(R"({"features":[{"name":"x","kind":"continuous",
                                                            "expected_format":"category-text"}]})")),
               SchemaError);
}

TEST(Config, DefaultsValidate) {
  ProfilerConfig c;
  EXPECT_THROW(c.validate(), ConfigError);
  c.expected_interval = 1s;
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, RoundTripsThroughJson) {
  const auto c = config_from_json(json::parse(R"({"expected_interval": 10, "seasonal_periods": [144],
                                                 "duplicate_policy": "mean", "spike_k": 4})"));
  EXPECT_EQ(c.expected_interval, 10s);
  EXPECT_EQ(c.duplicate_policy, MergePolicy::mean);
  const auto again = config_from_json(to_json(c));
  EXPECT_EQ(to_json(again), to_json(c));
}

TEST(Config, RejectsBadFields) {
  EXPECT_THROW(config_from_json(json::parse(R"({"expected_intervall": 10})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"veracity_weights": [0.5, 0.5, 0.5, 0.5]})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"expected_interval": -1})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"sms_max": 7200, "mms_max": 3600})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse("[1, 2]")), ConfigError);
}

TEST(Config, EffectiveSeasonalPeriodIsOneDay) {
  ProfilerConfig c;
  c.expected_interval = 10s;
  EXPECT_EQ(c.effective_seasonal_periods(), std::vector<std::size_t>{8640});
  c.seasonal_periods = {24, 48};
  EXPECT_EQ(c.effective_seasonal_periods(), (std::vector<std::size_t>{24, 48}));
}

TEST(LoadDataset, ThreeRowsTwoFeatures) {
  const auto ds = load("timestamp,a,b\n1970-01-01T00:00:00,1,2\n1970-01-01T00:00:01,3,4\n"
                       "1970-01-01T00:00:02,5,6\n",
                       two_floats());
  EXPECT_EQ(ds.nf(), 2u);
  EXPECT_EQ(ds.ni, 3u);
  EXPECT_EQ(ds.find("b")->series.values, (std::vector<double>{2, 4, 6}));
}

TEST(LoadDataset, SortsRowsStably) {
  const auto ds = load("timestamp,a,b\n1970-01-01T00:00:02,1,0\n1970-01-01T00:00:00,2,0\n"
                       "1970-01-01T00:00:02,3,0\n1970-01-01T00:00:01,4,0\n",
                       two_floats());
  const auto& s = ds.features[0].series;
  EXPECT_TRUE(std::is_sorted(s.timestamps.begin(), s.timestamps.end()));
  EXPECT_EQ(s.values, (std::vector<double>{2, 4, 1, 3}));
  EXPECT_EQ(ds.ni, 3u);
}

TEST(LoadDataset, KeepsViolationsAsMissing) {
  std::vector<FeatureSchema> schema{{"n", FeatureKind::continuous, StorageFormat::integer, DataForm::structured}};
  const auto ds = load("timestamp,n\n1970-01-01T00:00:00,1\n1970-01-01T00:00:01,abc\n1970-01-01T00:00:02,NA\n", schema);
  const auto& f = ds.features[0];
  EXPECT_EQ(f.series.missing_count(), 2u);
  ASSERT_EQ(f.violations.size(), 1u);
  EXPECT_EQ(f.violations[0].row, 1u);
  EXPECT_EQ(f.violations[0].cell, "abc");

  const auto v = validate_schema(ds, schema);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].feature, "n");
  EXPECT_EQ(v[0].row, 1u);
}

TEST(LoadDataset, CleanFloatColumnHasNoViolations) {
  const auto ds = load("timestamp,a,b\n1970-01-01T00:00:00,1.5,-2e3\n1970-01-01T00:00:01,,7\n", two_floats());
  EXPECT_TRUE(validate_schema(ds, two_floats()).empty());
}

TEST(LoadDataset, ViolationCountMatchesCellByCellReparse) {
  std::mt19937_64 rng(11);
  std::vector<FeatureSchema> schema{{"n", FeatureKind::continuous, StorageFormat::integer, DataForm::structured}};
  const std::vector<std::string> pool{"1", "-4", "2.5", "x", "", "NA", "1e3", "12"};
  std::string csv = "timestamp,n\n";
  std::size_t expected = 0;
  for (int i = 0; i < 500; ++i) {
    const auto& cell = pool[rng() % pool.size()];
    csv += std::to_string(i) + "," + cell + "\n";
    if (!is_missing_token(cell) && !parse_cell(cell, StorageFormat::integer)) ++expected;
  }
  ProfilerConfig cfg;
  cfg.timestamp_format.format = TimestampFormat::epoch_seconds;
  EXPECT_EQ(load(csv, schema, cfg).features[0].violations.size(), expected);
}

TEST(LoadDataset, MissingTokens) {
  EXPECT_TRUE(is_missing_token(""));
  EXPECT_TRUE(is_missing_token("nan"));
  EXPECT_TRUE(is_missing_token("NULL"));
  EXPECT_FALSE(is_missing_token("-"));
  const std::vector<std::string> extra{"-"};
  EXPECT_TRUE(is_missing_token("-", extra));
}

TEST(LoadDataset, RejectsUnparseableTimestampRows) {
  const auto ds = load("timestamp,a,b\n1970-01-01T00:00:00,1,2\nbad,3,4\n1970-01-01T00:00:01,5,6\n", two_floats());
  EXPECT_EQ(ds.ni, 2u);
  ASSERT_EQ(ds.rejected_rows.size(), 1u);
  EXPECT_EQ(ds.rejected_rows[0].row, 1u);
  EXPECT_EQ(ds.rejected_rows[0].timestamp, "bad");
}

TEST(LoadDataset, CustomDelimiterAndColumn) {
  ProfilerConfig cfg;
  cfg.delimiter = ';';
  cfg.timestamp_column = "time";
  const auto ds = load("a;time;b\n1;1970-01-01T00:00:00;2\n", two_floats(), cfg);
  EXPECT_EQ(ds.features[1].series.values, std::vector<double>{2});
}

TEST(LoadDataset, CategoricalCodes) {
  std::vector<FeatureSchema> schema{
      {"m", FeatureKind::categorical, StorageFormat::category_text, DataForm::structured}};
  const auto ds = load("timestamp,m\n1970-01-01T00:00:00,on\n1970-01-01T00:00:01,off\n1970-01-01T00:00:02,on\n", schema);
  const auto& s = ds.features[0].series;
  ASSERT_TRUE(s.categorical());
  EXPECT_EQ(s.token(s.values[0]), "on");
  EXPECT_EQ(s.values[0], s.values[2]);
  EXPECT_NE(s.values[0], s.values[1]);
}

TEST(LoadDataset, Errors) {
  EXPECT_THROW(load("", two_floats()), SchemaError);
  EXPECT_THROW(load("time,a,b\n", two_floats()), SchemaError);
  EXPECT_THROW(load("timestamp,a\n", two_floats()), SchemaError);
  EXPECT_THROW(load_dataset_file("/nonexistent/file.csv", two_floats(), {}), IoError);
}

TEST(LoadDataset, EverySeriesHasOneEntryPerRow) {
  const auto ds = load("timestamp,a,b\n1970-01-01T00:00:00,1,\n1970-01-01T00:00:00,,2\n1970-01-01T00:00:05,3,4\n",
                       two_floats());
  for (const auto& f : ds.features) {
    EXPECT_EQ(f.series.size(), 3u);
    EXPECT_EQ(f.series.timestamps.size(), 3u);
  }
  EXPECT_EQ(ds.ni, 2u);
}

TEST(LoadDataset, Deterministic) {
  const std::string csv = "timestamp,a,b\n1970-01-01T00:00:01,1,2\n1970-01-01T00:00:00,x,4\n";
  const auto a = load(csv, two_floats());
  const auto b = load(csv, two_floats());
  for (std::size_t i = 0; i < a.nf(); ++i) {
    EXPECT_EQ(a.features[i].series.timestamps, b.features[i].series.timestamps);
    EXPECT_EQ(a.features[i].violations, b.features[i].violations);
  }
}

}  // namespace
}  // namespace sixvs
