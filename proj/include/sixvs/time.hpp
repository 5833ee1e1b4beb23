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

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sixvs/errors.hpp"

namespace sixvs {

/// Microsecond resolution is enough for every acquisition system we target
/// and keeps +-292k years of range in an int64.
using Duration = std::chrono::microseconds;
using Instant = std::chrono::sys_time<Duration>;

enum class TimestampFormat { iso8601, epoch_seconds, epoch_milliseconds, custom };

struct TimestampSpec {
  TimestampFormat format = TimestampFormat::iso8601;
  /// strftime-like pattern for TimestampFormat::custom. Supported fields:
  /// %Y %m %d %H %M %S %f (fractional seconds) and %% ; everything else is literal.
  std::string pattern;
};

std::string_view to_string(TimestampFormat f);
TimestampFormat timestamp_format_from_string(std::string_view s);

/// Parses `raw` under `spec`. Throws FormatViolationError carrying `row`.
Instant parse_timestamp(std::string_view raw, const TimestampSpec& spec,
                        std::size_t row = FormatViolationError::kNoRow);

std::optional<Instant> try_parse_timestamp(std::string_view raw, const TimestampSpec& spec) noexcept;

/// Canonical form: YYYY-MM-DDTHH:MM:SS with a trailing-zero-trimmed fraction
/// only when the instant has sub-second content. Always UTC.
std::string render_timestamp(Instant t);

Duration seconds(double s);
double to_seconds(Duration d);

/// "10s", "0.5s", "1800s".
std::string render_duration(Duration d);

}  // namespace sixvs
