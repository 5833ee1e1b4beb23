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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sixvs/pipeline.hpp"
#include "sixvs/recommend.hpp"

namespace sixvs {

enum class ReportFormat { machine, human };
ReportFormat report_format_from_string(std::string_view s);

/// The machine report as a JSON value. Timestamps are ISO-8601 strings,
/// durations are seconds, undefined values are null and +infinity is "+inf".
nlohmann::json report_json(const DatasetProfile& profile, const std::vector<Recommendation>& recs);

/// Serialises with sorted keys, two-space indentation and at most 12
/// significant digits per number. Scalar arrays stay on one line.
std::string render_json(const nlohmann::json& doc);

std::string emit_report(const DatasetProfile& profile, const std::vector<Recommendation>& recs, ReportFormat format);

struct ParsedReport {
  DatasetProfile profile;
  std::vector<Recommendation> recommendations;
};

/// Inverse of the machine format. Throws FormatViolationError on malformed input.
ParsedReport parse_report(std::string_view text);

/// "Vol=... Varie=... Vel=... Ver=... Val=... Varia=..."
std::string score_summary(const SixVsScores& s);

/// Throws IoError when `path` cannot be written.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace sixvs
