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

#include "sixvs/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixvs/errors.hpp"
#include "sixvs/ingestion.hpp"
#include "sixvs/pipeline.hpp"
#include "sixvs/recommend.hpp"
#include "sixvs/report.hpp"
#include "sixvs/schema.hpp"

namespace sixvs {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read", path);
  return buf.str();
}

nlohmann::json read_json(const std::string& path, const char* what) {
  const std::string text = read_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string(what) + " " + path + " is not valid JSON: " + e.what());
  }
}

struct ProfileArgs {
  std::string input;
  std::string schema;
  std::string config;
  std::string out;
  std::string format = "machine";
  std::string delimiter;
  std::string timestamp_column;
  unsigned long long seed = 20240807;
};

int run_profile(const ProfileArgs& a, std::ostream& out) {
  const auto schema = schema_from_json(read_json(a.schema, "schema"));
  ProfilerConfig config = config_from_json(read_json(a.config, "config"));
  if (a.delimiter == "\\t") {
    config.delimiter = '\t';
  } else if (!a.delimiter.empty()) {
    if (a.delimiter.size() != 1) throw ConfigError("--delimiter must be a single character");
    config.delimiter = a.delimiter[0];
  }
  if (!a.timestamp_column.empty()) config.timestamp_column = a.timestamp_column;
  config.validate();
  const ReportFormat format = report_format_from_string(a.format);

  Dataset ds = load_dataset_file(a.input, schema, config);
  ds.name = std::filesystem::path(a.input).stem().string();
  const DatasetProfile profile = run_pipeline(ds, config);
  const auto recs = recommend(profile);
  const std::string report = emit_report(profile, recs, format);
  if (a.out.empty()) {
    out << report;
  } else {
    write_text_file(a.out, report);
    out << score_summary(profile.scores) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& path, std::ostream& out) {
  const ParsedReport parsed = parse_report(read_file(path));
  int status = kExitOk;
  for (const auto& name : inconsistent_scores(parsed.profile)) {
    out << "inconsistent score: " << name << "\n";
    status = kExitInconsistent;
  }
  for (const auto& rec : parsed.recommendations) {
    if (trigger_holds(rec, parsed.profile)) continue;
    out << "unsupported recommendation: " << rec.rule << (rec.feature.empty() ? "" : " (" + rec.feature + ")")
        << "\n";
    status = kExitInconsistent;
  }
  if (status == kExitOk) out << "consistent: " << score_summary(parsed.profile.scores) << "\n";
  return status;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characterise a timestamped sensor dataset along the 6Vs.", "sixvs"};
  app.require_subcommand(1);

  ProfileArgs pa;
  auto* profile = app.add_subcommand("profile", "Run the full pipeline and write a report.");
  profile->add_option("--input", pa.input, "Delimited text file with a header row")->required();
  profile->add_option("--schema", pa.schema, "JSON feature schema")->required();
  profile->add_option("--config", pa.config, "JSON profiler configuration")->required();
  profile->add_option("--out", pa.out, "Report path (default: standard output)");
  profile->add_option("--format", pa.format, "machine or human")->check(CLI::IsMember({"machine", "human"}));
  profile->add_option("--delimiter", pa.delimiter, "Field delimiter (overrides the config)");
  profile->add_option("--timestamp-column", pa.timestamp_column, "Timestamp column (overrides the config)");
  profile->add_option("--seed", pa.seed, "Seed for randomised diagnostics");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Recompute scores and recommendation triggers of a machine report.");
  verify->add_option("--report", report_path, "Machine report to check")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto* sub = profile->parsed() ? profile : (verify->parsed() ? verify : &app);
    err << sub->help();
    return kExitConfig;
  }

  try {
    if (profile->parsed()) return run_profile(pa, out);
    return run_verify(report_path, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FormatViolationError& e) {
    err << "format error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace sixvs
