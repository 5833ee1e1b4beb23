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

#include "sixvs/ingestion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <istream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "sixvs/errors.hpp"

namespace sixvs {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

std::optional<double> parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return static_cast<double>(v);
}

std::optional<double> parse_float(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<bool> parse_bool(std::string_view s) {
  if (iequals(s, "true") || iequals(s, "yes") || s == "1") return true;
  if (iequals(s, "false") || iequals(s, "no") || s == "0") return false;
  return std::nullopt;
}

// Splits delimited text into records; quoted fields follow RFC 4180.
class RecordReader {
 public:
  RecordReader(std::string_view data, char delim) : data_(data), delim_(delim) {}

  bool next(std::vector<std::string_view>& fields) {
    fields.clear();
    unescaped_.clear();
    if (pos_ >= data_.size()) return false;
    while (true) {
      if (pos_ < data_.size() && data_[pos_] == '"') {
        read_quoted(fields);
      } else {
        const std::size_t start = pos_;
        while (pos_ < data_.size() && data_[pos_] != delim_ && data_[pos_] != '\n') ++pos_;
        std::string_view f = data_.substr(start, pos_ - start);
        if (!f.empty() && f.back() == '\r' && (pos_ >= data_.size() || data_[pos_] == '\n')) f.remove_suffix(1);
        fields.push_back(f);
      }
      if (pos_ >= data_.size()) return true;
      if (data_[pos_] == delim_) {
        ++pos_;
        if (pos_ >= data_.size()) {
          fields.emplace_back();
          return true;
        }
        continue;
      }
      if (data_[pos_] == '\r') ++pos_;
      if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
      return true;
    }
  }

 private:
  void read_quoted(std::vector<std::string_view>& fields) {
    ++pos_;
    std::string text;
    bool escaped = false;
    const std::size_t start = pos_;
    while (pos_ < data_.size()) {
      if (data_[pos_] == '"') {
        if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '"') {
          escaped = true;
          text.push_back('"');
          pos_ += 2;
          continue;
        }
        break;
      }
      text.push_back(data_[pos_]);
      ++pos_;
    }
    const std::size_t end = pos_;
    if (pos_ < data_.size()) ++pos_;  // closing quote
    // Anything between the closing quote and the delimiter is kept verbatim.
    while (pos_ < data_.size() && data_[pos_] != delim_ && data_[pos_] != '\n' && data_[pos_] != '\r') {
      text.push_back(data_[pos_]);
      ++pos_;
      escaped = true;
    }
    if (!escaped) {
      fields.push_back(data_.substr(start, end - start));
    } else {
      unescaped_.push_back(std::move(text));
      fields.push_back(unescaped_.back());
    }
  }

  std::string_view data_;
  char delim_;
  std::size_t pos_ = 0;
  std::deque<std::string> unescaped_;
};

struct ColumnBuilder {
  const FeatureSchema* schema = nullptr;
  std::size_t column = 0;
  std::vector<double> values;
  std::vector<FormatViolation> violations;
  std::shared_ptr<CategoryDictionary> dictionary;
  std::unordered_map<std::string, double> codes;
};

void sort_rows(std::vector<Instant>& stamps, std::vector<ColumnBuilder>& columns) {
  if (std::is_sorted(stamps.begin(), stamps.end())) return;
  std::vector<std::size_t> order(stamps.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return stamps[a] < stamps[b]; });
  std::vector<Instant> sorted_stamps(stamps.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted_stamps[i] = stamps[order[i]];
  stamps = std::move(sorted_stamps);
  std::vector<double> scratch(order.size());
  for (auto& col : columns) {
    for (std::size_t i = 0; i < order.size(); ++i) scratch[i] = col.values[order[i]];
    col.values.swap(scratch);
  }
}

std::size_t count_distinct_sorted(const std::vector<Instant>& stamps) {
  if (stamps.empty()) return 0;
  std::size_t n = 1;
  for (std::size_t i = 1; i < stamps.size(); ++i) n += stamps[i] != stamps[i - 1] ? 1 : 0;
  return n;
}

}  // namespace

const Feature* Dataset::find(std::string_view feature) const noexcept {
  for (const auto& f : features)
    if (f.schema.name == feature) return &f;
  return nullptr;
}

bool is_missing_token(std::string_view text, std::span<const std::string> extra) {
  text = trim(text);
  if (text.empty() || iequals(text, "NA") || iequals(text, "NaN") || iequals(text, "null")) return true;
  return std::any_of(extra.begin(), extra.end(), [&](const std::string& t) { return iequals(text, trim(t)); });
}

std::optional<double> parse_cell(std::string_view text, StorageFormat format) {
  text = trim(text);
  switch (format) {
    case StorageFormat::integer: return parse_integer(text);
    case StorageFormat::floating: return parse_float(text);
    case StorageFormat::boolean:
      if (auto b = parse_bool(text)) return *b ? 1.0 : 0.0;
      return std::nullopt;
    case StorageFormat::timestamp:
      if (auto t = try_parse_timestamp(text, TimestampSpec{})) return static_cast<double>(t->time_since_epoch().count());
      return std::nullopt;
    case StorageFormat::category_text:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::string> canonical_token(std::string_view text, StorageFormat format) {
  text = trim(text);
  switch (format) {
    case StorageFormat::integer:
      if (auto v = parse_integer(text)) return std::to_string(static_cast<long long>(*v));
      return std::nullopt;
    case StorageFormat::floating:
      if (auto v = parse_float(text)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", *v);
        return std::string(buf);
      }
      return std::nullopt;
    case StorageFormat::boolean:
      if (auto b = parse_bool(text)) return std::string(*b ? "true" : "false");
      return std::nullopt;
    case StorageFormat::timestamp:
      if (auto t = try_parse_timestamp(text, TimestampSpec{})) return render_timestamp(*t);
      return std::nullopt;
    case StorageFormat::category_text:
      if (text.empty()) return std::nullopt;
      return std::string(text);
  }
  return std::nullopt;
}

Dataset load_dataset(std::istream& source, std::span<const FeatureSchema> schema, const ProfilerConfig& config,
                     std::string name) {
  check_schema(schema);
  const std::string data{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  std::string_view view = data;
  if (view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);

  RecordReader reader(view, config.delimiter);
  std::vector<std::string_view> fields;
  if (trim(view).empty() || !reader.next(fields)) throw SchemaError("empty input: no header row");

  std::vector<std::string> header;
  header.reserve(fields.size());
  for (auto f : fields) header.emplace_back(trim(f));
  auto column_of = [&](std::string_view col) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == col) return i;
    return std::nullopt;
  };

  const auto ts_col = column_of(config.timestamp_column);
  if (!ts_col) throw SchemaError("timestamp column '" + config.timestamp_column + "' not found in header");

  std::vector<ColumnBuilder> columns(schema.size());
  for (std::size_t i = 0; i < schema.size(); ++i) {
    const auto col = column_of(schema[i].name);
    if (!col) throw SchemaError("schema feature '" + schema[i].name + "' not found in header");
    columns[i].schema = &schema[i];
    columns[i].column = *col;
    if (schema[i].kind == FeatureKind::categorical) columns[i].dictionary = std::make_shared<CategoryDictionary>();
  }

  Dataset ds;
  ds.name = std::move(name);
  std::vector<Instant> stamps;
  std::size_t row = 0;
  for (; reader.next(fields); ++row) {
    if (fields.size() == 1 && trim(fields[0]).empty()) {
      --row;  // blank line
      continue;
    }
    const std::string_view ts_text = *ts_col < fields.size() ? fields[*ts_col] : std::string_view{};
    const auto t = try_parse_timestamp(ts_text, config.timestamp_format);
    if (!t) {
      ds.rejected_rows.push_back({row, std::string(ts_text)});
      continue;
    }
    if (fields.size() < header.size()) ++ds.short_rows;
    stamps.push_back(*t);
    for (auto& col : columns) {
      const std::string_view cell = col.column < fields.size() ? fields[col.column] : std::string_view{};
      if (is_missing_token(cell, config.missing_tokens)) {
        col.values.push_back(kMissing);
        continue;
      }
      if (col.dictionary) {
        auto token = canonical_token(cell, col.schema->expected_format);
        if (!token) {
          col.values.push_back(kMissing);
          col.violations.push_back({row, std::string(cell), col.schema->expected_format});
          continue;
        }
        auto [it, inserted] = col.codes.try_emplace(*token, static_cast<double>(col.dictionary->tokens.size()));
        if (inserted) col.dictionary->tokens.push_back(std::move(*token));
        col.values.push_back(it->second);
      } else {
        auto v = parse_cell(cell, col.schema->expected_format);
        if (!v) {
          col.values.push_back(kMissing);
          col.violations.push_back({row, std::string(cell), col.schema->expected_format});
          continue;
        }
        col.values.push_back(*v);
      }
    }
  }

  sort_rows(stamps, columns);
  ds.ni = count_distinct_sorted(stamps);
  ds.features.reserve(columns.size());
  for (auto& col : columns) {
    Feature f;
    f.schema = *col.schema;
    f.series.timestamps = stamps;
    f.series.values = std::move(col.values);
    f.series.categories = std::move(col.dictionary);
    f.violations = std::move(col.violations);
    ds.features.push_back(std::move(f));
  }
  return ds;
}

Dataset load_dataset_file(const std::string& path, std::span<const FeatureSchema> schema,
                          const ProfilerConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input", path);
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  return load_dataset(in, schema, config, name);
}

Dataset make_dataset(std::string name, std::vector<Feature> features) {
  Dataset ds;
  ds.name = std::move(name);
  std::vector<Instant> all;
  for (const auto& f : features) all.insert(all.end(), f.series.timestamps.begin(), f.series.timestamps.end());
  std::sort(all.begin(), all.end());
  ds.ni = count_distinct_sorted(all);
  ds.features = std::move(features);
  return ds;
}

std::vector<SchemaViolation> validate_schema(const Dataset& ds, std::span<const FeatureSchema> schema) {
  std::vector<SchemaViolation> out;
  for (const auto& s : schema) {
    const Feature* f = ds.find(s.name);
    if (f == nullptr) {
      out.push_back({s.name, FormatViolationError::kNoRow, "<absent>", s.expected_format});
      continue;
    }
    for (const auto& v : f->violations) out.push_back({s.name, v.row, v.cell, v.expected});
  }
  return out;
}

}  // namespace sixvs
