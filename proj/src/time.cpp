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

#include "sixvs/time.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>

namespace sixvs {
namespace {

using std::chrono::days;
using std::chrono::hours;
using std::chrono::minutes;
using std::chrono::sys_days;

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  // Reads between min_digits and max_digits decimal digits.
  std::optional<int> digits(int min_digits, int max_digits) {
    int value = 0;
    int n = 0;
    while (n < max_digits && !done() && s[pos] >= '0' && s[pos] <= '9') {
      value = value * 10 + (s[pos] - '0');
      ++pos;
      ++n;
    }
    if (n < min_digits) return std::nullopt;
    return value;
  }
  // Fractional digits after the decimal point, as microseconds (truncated past 6 digits).
  std::optional<std::int64_t> fraction() {
    std::int64_t micros = 0;
    int n = 0;
    while (!done() && s[pos] >= '0' && s[pos] <= '9') {
      if (n < 6) micros = micros * 10 + (s[pos] - '0');
      ++pos;
      ++n;
    }
    if (n == 0) return std::nullopt;
    for (int i = n; i < 6; ++i) micros *= 10;
    return micros;
  }
};

struct Fields {
  int year = 1970, month = 1, day = 1, hour = 0, minute = 0, second = 0;
  std::int64_t micros = 0;
  std::int64_t offset_seconds = 0;
};

std::optional<Instant> assemble(const Fields& f) {
  using namespace std::chrono;
  const year_month_day ymd{year{f.year}, month{static_cast<unsigned>(f.month)},
                           day{static_cast<unsigned>(f.day)}};
  if (!ymd.ok() || f.hour > 23 || f.minute > 59 || f.second > 59) return std::nullopt;
  Instant t = time_point_cast<Duration>(sys_days{ymd}) + hours{f.hour} + minutes{f.minute} +
              std::chrono::seconds{f.second} + microseconds{f.micros};
  return t - std::chrono::seconds{f.offset_seconds};
}

std::optional<Instant> parse_iso(std::string_view raw) {
  Cursor c{raw};
  Fields f;
  auto y = c.digits(4, 4);
  if (!y || !c.eat('-')) return std::nullopt;
  auto mo = c.digits(2, 2);
  if (!mo || !c.eat('-')) return std::nullopt;
  auto d = c.digits(2, 2);
  if (!d) return std::nullopt;
  f.year = *y;
  f.month = *mo;
  f.day = *d;
  if (c.done()) return assemble(f);
  if (!c.eat('T') && !c.eat(' ')) return std::nullopt;
  auto h = c.digits(2, 2);
  if (!h || !c.eat(':')) return std::nullopt;
  auto mi = c.digits(2, 2);
  if (!mi) return std::nullopt;
  f.hour = *h;
  f.minute = *mi;
  if (c.eat(':')) {
    auto sec = c.digits(2, 2);
    if (!sec) return std::nullopt;
    f.second = *sec;
    if (c.eat('.') || c.eat(',')) {
      auto frac = c.fraction();
      if (!frac) return std::nullopt;
      f.micros = *frac;
    }
  }
  if (c.eat('Z')) {
    // UTC
  } else if (c.peek() == '+' || c.peek() == '-') {
    const int sign = c.peek() == '-' ? -1 : 1;
    ++c.pos;
    auto oh = c.digits(2, 2);
    if (!oh) return std::nullopt;
    c.eat(':');
    auto om = c.digits(2, 2);
    if (!om || *oh > 23 || *om > 59) return std::nullopt;
    f.offset_seconds = sign * (*oh * 3600 + *om * 60);
  }
  if (!c.done()) return std::nullopt;
  return assemble(f);
}

// Decimal number split into an integer part and a scaled fraction, so
// epoch values never pass through floating point.
std::optional<Instant> parse_epoch(std::string_view raw, std::int64_t units_per_second) {
  Cursor c{raw};
  const bool negative = c.eat('-');
  if (!negative) c.eat('+');
  const std::size_t start = c.pos;
  while (!c.done() && c.peek() >= '0' && c.peek() <= '9') ++c.pos;
  if (c.pos == start) return std::nullopt;
  std::int64_t whole = 0;
  auto [p, ec] = std::from_chars(raw.data() + start, raw.data() + c.pos, whole);
  if (ec != std::errc{}) return std::nullopt;
  std::int64_t frac_micros = 0;
  if (c.eat('.')) {
    auto frac = c.fraction();
    if (!frac) return std::nullopt;
    frac_micros = *frac;
  }
  if (!c.done()) return std::nullopt;
  const std::int64_t micros_per_unit = 1'000'000 / units_per_second;
  std::int64_t total = 0;
  if (__builtin_mul_overflow(whole, micros_per_unit, &total)) return std::nullopt;
  total += frac_micros / units_per_second;
  if (negative) total = -total;
  return Instant{Duration{total}};
}

std::optional<Instant> parse_custom(std::string_view raw, std::string_view pattern) {
  Cursor c{raw};
  Fields f;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '%' || i + 1 == pattern.size()) {
      if (!c.eat(pattern[i])) return std::nullopt;
      continue;
    }
    const char spec = pattern[++i];
    std::optional<int> v;
    switch (spec) {
      case 'Y':
        v = c.digits(4, 4);
        if (!v) return std::nullopt;
        f.year = *v;
        break;
      case 'm':
        v = c.digits(1, 2);
        if (!v) return std::nullopt;
        f.month = *v;
        break;
      case 'd':
        v = c.digits(1, 2);
        if (!v) return std::nullopt;
        f.day = *v;
        break;
      case 'H':
        v = c.digits(1, 2);
        if (!v) return std::nullopt;
        f.hour = *v;
        break;
      case 'M':
        v = c.digits(1, 2);
        if (!v) return std::nullopt;
        f.minute = *v;
        break;
      case 'S':
        v = c.digits(1, 2);
        if (!v) return std::nullopt;
        f.second = *v;
        break;
      case 'f': {
        auto frac = c.fraction();
        if (!frac) return std::nullopt;
        f.micros = *frac;
        break;
      }
      case '%':
        if (!c.eat('%')) return std::nullopt;
        break;
      default:
        return std::nullopt;
    }
  }
  if (!c.done()) return std::nullopt;
  return assemble(f);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(TimestampFormat f) {
  switch (f) {
    case TimestampFormat::iso8601: return "iso8601";
    case TimestampFormat::epoch_seconds: return "epoch-seconds";
    case TimestampFormat::epoch_milliseconds: return "epoch-milliseconds";
    case TimestampFormat::custom: return "custom";
  }
  return "iso8601";
}

TimestampFormat timestamp_format_from_string(std::string_view s) {
  if (s == "iso8601" || s == "ISO-8601" || s == "iso-8601") return TimestampFormat::iso8601;
  if (s == "epoch-seconds") return TimestampFormat::epoch_seconds;
  if (s == "epoch-milliseconds") return TimestampFormat::epoch_milliseconds;
  if (s == "custom") return TimestampFormat::custom;
  throw ConfigError("unknown timestamp format '" + std::string(s) + "'");
}

std::optional<Instant> try_parse_timestamp(std::string_view raw, const TimestampSpec& spec) noexcept {
  raw = trim(raw);
  if (raw.empty()) return std::nullopt;
  switch (spec.format) {
    case TimestampFormat::iso8601: return parse_iso(raw);
    case TimestampFormat::epoch_seconds: return parse_epoch(raw, 1);
    case TimestampFormat::epoch_milliseconds: return parse_epoch(raw, 1000);
    case TimestampFormat::custom: return parse_custom(raw, spec.pattern);
  }
  return std::nullopt;
}

Instant parse_timestamp(std::string_view raw, const TimestampSpec& spec, std::size_t row) {
  if (auto t = try_parse_timestamp(raw, spec)) return *t;
  throw FormatViolationError("timestamp '" + std::string(raw) + "' does not match " +
                                 std::string(to_string(spec.format)),
                             row);
}

std::string render_timestamp(Instant t) {
  using namespace std::chrono;
  const auto day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  auto rest = t - day_point;
  const auto h = duration_cast<hours>(rest);
  rest -= h;
  const auto m = duration_cast<minutes>(rest);
  rest -= m;
  const auto s = duration_cast<std::chrono::seconds>(rest);
  rest -= s;
  char buf[64];
  int n = std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                        static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                        static_cast<int>(h.count()), static_cast<int>(m.count()),
                        static_cast<int>(s.count()));
  std::string out(buf, static_cast<std::size_t>(n));
  if (auto us = rest.count(); us != 0) {
    char frac[8];
    std::snprintf(frac, sizeof frac, "%06lld", static_cast<long long>(us));
    std::string f(frac);
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += '.';
    out += f;
  }
  return out;
}

Duration seconds(double s) { return Duration{static_cast<std::int64_t>(std::llround(s * 1e6))}; }

double to_seconds(Duration d) { return static_cast<double>(d.count()) / 1e6; }

std::string render_duration(Duration d) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12gs", to_seconds(d));
  return buf;
}

}  // namespace sixvs
