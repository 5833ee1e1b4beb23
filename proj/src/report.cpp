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

#include "sixvs/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>

#include "sixvs/errors.hpp"

namespace sixvs {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Writing
// ---------------------------------------------------------------------------

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
json stamp(Instant t) { return render_timestamp(t); }
json secs(Duration d) { return to_seconds(d); }

json seasonality_json(const SeasonalityResult& s) {
  return {{"seasonal", s.seasonal},
          {"low_confidence", s.low_confidence},
          {"period", s.period ? json(*s.period) : json(nullptr)},
          {"strength", opt(s.strength)}};
}

json acf_json(const std::optional<std::vector<double>>& acf) { return acf ? json(*acf) : json(nullptr); }

json missing_json(const MissingReport& m) {
  json spans = json::array();
  for (const auto& s : m.spans)
    spans.push_back({{"start", stamp(s.start)},
                     {"end", stamp(s.end)},
                     {"length", s.length},
                     {"duration", secs(s.duration)},
                     {"class", to_string(s.span_class)}});
  return {{"pmv", m.pmv},   {"missing", m.missing}, {"total", m.total}, {"sms", m.sms},
          {"mms", m.mms},   {"lms", m.lms},         {"spans", spans}};
}

json distribution_json(const FormDistribution& d) { return {{"psd", d.psd}, {"pud", d.pud}, {"pssd", d.pssd}}; }

json feature_json(const FeatureProfile& f) {
  json j;
  j["name"] = f.schema.name;
  j["kind"] = to_string(f.schema.kind);
  j["expected_format"] = to_string(f.schema.expected_format);
  j["expected_form"] = to_string(f.schema.expected_form);

  json groups = json::array();
  for (const auto& g : f.duplicates.groups)
    groups.push_back({{"timestamp", stamp(g.timestamp)}, {"rows", g.rows}, {"same_value", g.same_value}});
  j["duplicates"] = {{"dts", f.duplicates.dts}, {"dtd", f.duplicates.dtd}, {"groups", groups}};

  json resolutions = json::array();
  for (const auto& r : f.resolutions) {
    json e{{"timestamp", stamp(r.timestamp)}, {"rows", r.rows}, {"same_value", r.same_value}};
    e["chosen"] = r.chosen;
    e["token"] = r.token ? json(*r.token) : json(nullptr);
    resolutions.push_back(std::move(e));
  }
  j["resolutions"] = resolutions;

  j["intervals"] = {{"expected", secs(f.intervals.expected)},
                    {"total", f.intervals.total_intervals},
                    {"normal", f.intervals.normal_intervals},
                    {"pti", opt(f.intervals.pti)},
                    {"irregular_positions", f.intervals.irregular_positions}};
  j["format"] = {{"correct", f.format.correct}, {"degenerate", f.format.degenerate},
                 {"violations", f.format.violations}};
  j["form"] = {{"form", to_string(f.form.form)}, {"volume", f.form.volume}, {"cells", distribution_json(f.form.cells)}};
  j["missing_old"] = missing_json(f.missing_old);
  j["missing_new"] = missing_json(f.missing_new);

  if (f.spikes) {
    json events = json::array();
    for (const auto& e : f.spikes->events)
      events.push_back({{"timestamp", stamp(e.timestamp)}, {"value", e.value}, {"index", e.index}});
    j["spikes"] = {{"nas", f.spikes->nas},
                   {"candidates", f.spikes->candidates},
                   {"insufficient_data", f.spikes->insufficient_data},
                   {"events", events}};
  } else {
    j["spikes"] = nullptr;
  }

  if (f.continuous) {
    const auto& c = *f.continuous;
    j["statistics"] = {{"count", c.count},
                       {"cardinality", c.cardinality},
                       {"min", c.min},
                       {"q1", c.q1},
                       {"mean", c.mean},
                       {"median", c.median},
                       {"q3", c.q3},
                       {"max", c.max},
                       {"std", c.std},
                       {"skewness", opt(c.skewness)},
                       {"excess_kurtosis", opt(c.excess_kurtosis)},
                       {"seasonality", seasonality_json(c.seasonality)},
                       {"acf", acf_json(c.acf)}};
  } else if (f.categorical) {
    const auto& c = *f.categorical;
    j["statistics"] = {{"count", c.count},
                       {"cardinality", c.cardinality},
                       {"mode", c.mode ? json(*c.mode) : json(nullptr)},
                       {"mode_freq", c.mode_freq},
                       {"mode_pct", c.mode_pct},
                       {"seasonality", seasonality_json(c.seasonality)},
                       {"acf", acf_json(c.acf)}};
  } else {
    j["statistics"] = nullptr;
  }

  if (f.outliers) {
    const auto& o = *f.outliers;
    j["outliers"] = {{"defined", o.defined}, {"q1", o.q1},       {"q3", o.q3},
                     {"iqr", o.iqr},         {"lower", o.lower}, {"upper", o.upper},
                     {"indices", o.indices}, {"confirmed", o.confirmed},
                     {"count", o.count},     {"rate", o.rate}};
  } else {
    j["outliers"] = nullptr;
  }

  json slots = json::array();
  for (const auto& s : f.slots) slots.push_back({{"factor", s.factor}, {"valid", s.valid}});
  j["slots"] = slots;
  j["alignment"] = {{"slots", f.alignment.slots},
                    {"assigned", f.alignment.assigned},
                    {"dropped", f.alignment.dropped},
                    {"merged_slots", f.alignment.merged_slots}};
  return j;
}

json correlation_json(const CrossCorrelationResult& r) {
  return {{"a", r.feature_a}, {"b", r.feature_b}, {"value", opt(r.best_value)}, {"lag", r.best_lag}};
}

json scores_json(const SixVsScores& s) {
  const auto& c = s.components;
  const auto& v = c.variability;
  json terms = nullptr;
  if (c.veracity)
    terms = {{"format", c.veracity->format},
             {"spikes", c.veracity->spikes},
             {"intervals", c.veracity->intervals},
             {"missing", c.veracity->missing}};
  return {{"vol", s.vol},
          {"varie", s.varie},
          {"vel", secs(s.vel)},
          {"ver", opt(s.ver)},
          {"val", opt(s.val)},
          {"varia", opt(s.varia)},
          {"components",
           {{"nf", c.nf},
            {"ni", c.ni},
            {"forms", distribution_json(c.forms)},
            {"pcdf", c.pcdf},
            {"mean_nas", c.mean_nas},
            {"mean_pti", c.mean_pti},
            {"mean_pmv_raw", c.mean_pmv_raw},
            {"veracity_terms", terms},
            {"invalid_slots", c.invalid_slots},
            {"attempted_slots", c.attempted_slots},
            {"nstd", opt(v.nstd)},
            {"po", v.po},
            {"vc", opt(v.vc)},
            {"high_pairs", v.high_pairs},
            {"defined_pairs", v.defined_pairs}}}};
}

std::string render_number(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "\"+inf\"" : "\"-inf\"";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

bool scalar(const json& j) { return !j.is_object() && !j.is_array(); }

void write_value(const json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += json(it.key()).dump(-1, ' ', false, json::error_handler_t::replace);
        out += ": ";
        write_value(it.value(), out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), scalar);
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        write_value(e, out, depth + 1);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float: out += render_number(j.get<double>()); return;
    case json::value_t::string: out += j.dump(-1, ' ', false, json::error_handler_t::replace); return;
    default: out += j.dump(); return;
  }
}

// ---------------------------------------------------------------------------
// Reading
// ---------------------------------------------------------------------------

[[noreturn]] void malformed(const std::string& what) {
  throw FormatViolationError("malformed report: " + what);
}

double to_double(const json& j) {
  if (j.is_null()) return kMissing;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    malformed("expected a number, got '" + s + "'");
  }
  return j.get<double>();
}

std::optional<double> to_opt(const json& j) {
  if (j.is_null()) return std::nullopt;
  return to_double(j);
}

const TimestampSpec kIso{};
Instant to_instant(const json& j) { return parse_timestamp(j.get<std::string>(), kIso); }
Duration to_duration(const json& j) { return seconds(to_double(j)); }

SeasonalityResult seasonality_from(const json& j) {
  SeasonalityResult s;
  s.seasonal = j.at("seasonal").get<bool>();
  s.low_confidence = j.at("low_confidence").get<bool>();
  if (!j.at("period").is_null()) s.period = j.at("period").get<std::size_t>();
  s.strength = to_opt(j.at("strength"));
  return s;
}

std::optional<std::vector<double>> acf_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  std::vector<double> out;
  for (const auto& v : j) out.push_back(to_double(v));
  return out;
}

SpanClass span_class_from(std::string_view s) {
  if (s == "SMS") return SpanClass::short_term;
  if (s == "MMS") return SpanClass::medium_term;
  if (s == "LMS") return SpanClass::long_term;
  malformed("unknown span class " + std::string(s));
}

MissingReport missing_from(const json& j) {
  MissingReport m;
  m.pmv = to_double(j.at("pmv"));
  m.missing = j.at("missing").get<std::size_t>();
  m.total = j.at("total").get<std::size_t>();
  m.sms = j.at("sms").get<std::size_t>();
  m.mms = j.at("mms").get<std::size_t>();
  m.lms = j.at("lms").get<std::size_t>();
  for (const auto& s : j.at("spans"))
    m.spans.push_back({to_instant(s.at("start")), to_instant(s.at("end")), s.at("length").get<std::size_t>(),
                       to_duration(s.at("duration")), span_class_from(s.at("class").get<std::string>())});
  return m;
}

FormDistribution distribution_from(const json& j) {
  return {to_double(j.at("psd")), to_double(j.at("pud")), to_double(j.at("pssd"))};
}

FeatureProfile feature_from(const json& j) {
  FeatureProfile f;
  f.schema.name = j.at("name").get<std::string>();
  f.schema.kind = feature_kind_from_string(j.at("kind").get<std::string>());
  f.schema.expected_format = storage_format_from_string(j.at("expected_format").get<std::string>());
  f.schema.expected_form = data_form_from_string(j.at("expected_form").get<std::string>());

  const auto& d = j.at("duplicates");
  f.duplicates.dts = d.at("dts").get<std::size_t>();
  f.duplicates.dtd = d.at("dtd").get<std::size_t>();
  for (const auto& g : d.at("groups"))
    f.duplicates.groups.push_back(
        {to_instant(g.at("timestamp")), g.at("rows").get<std::vector<std::size_t>>(), g.at("same_value").get<bool>()});
  for (const auto& r : j.at("resolutions")) {
    Resolution res{to_instant(r.at("timestamp")), r.at("rows").get<std::size_t>(), r.at("same_value").get<bool>(),
                   to_double(r.at("chosen")), std::nullopt};
    if (!r.at("token").is_null()) res.token = r.at("token").get<std::string>();
    f.resolutions.push_back(std::move(res));
  }

  const auto& iv = j.at("intervals");
  f.intervals.expected = to_duration(iv.at("expected"));
  f.intervals.total_intervals = iv.at("total").get<std::size_t>();
  f.intervals.normal_intervals = iv.at("normal").get<std::size_t>();
  f.intervals.pti = to_opt(iv.at("pti"));
  f.intervals.irregular_positions = iv.at("irregular_positions").get<std::vector<std::size_t>>();

  const auto& fm = j.at("format");
  f.format = {f.schema.name, fm.at("correct").get<bool>(), fm.at("degenerate").get<bool>(),
              fm.at("violations").get<std::size_t>()};
  const auto& fo = j.at("form");
  f.form = {f.schema.name, data_form_from_string(fo.at("form").get<std::string>()), distribution_from(fo.at("cells")),
            fo.at("volume").get<std::size_t>()};
  f.missing_old = missing_from(j.at("missing_old"));
  f.missing_new = missing_from(j.at("missing_new"));

  if (const auto& s = j.at("spikes"); !s.is_null()) {
    SpikeReport r;
    r.nas = s.at("nas").get<std::size_t>();
    r.candidates = s.at("candidates").get<std::size_t>();
    r.insufficient_data = s.at("insufficient_data").get<bool>();
    for (const auto& e : s.at("events"))
      r.events.push_back({to_instant(e.at("timestamp")), to_double(e.at("value")), e.at("index").get<std::size_t>()});
    f.spikes = std::move(r);
  }

  if (const auto& s = j.at("statistics"); !s.is_null()) {
    if (f.schema.kind == FeatureKind::continuous) {
      ContinuousProfile c;
      c.count = s.at("count").get<std::size_t>();
      c.cardinality = s.at("cardinality").get<std::size_t>();
      c.min = to_double(s.at("min"));
      c.q1 = to_double(s.at("q1"));
      c.mean = to_double(s.at("mean"));
      c.median = to_double(s.at("median"));
      c.q3 = to_double(s.at("q3"));
      c.max = to_double(s.at("max"));
      c.std = to_double(s.at("std"));
      c.skewness = to_opt(s.at("skewness"));
      c.excess_kurtosis = to_opt(s.at("excess_kurtosis"));
      c.seasonality = seasonality_from(s.at("seasonality"));
      c.acf = acf_from(s.at("acf"));
      f.continuous = std::move(c);
    } else {
      CategoricalProfile c;
      c.count = s.at("count").get<std::size_t>();
      c.cardinality = s.at("cardinality").get<std::size_t>();
      if (!s.at("mode").is_null()) c.mode = s.at("mode").get<std::string>();
      c.mode_freq = s.at("mode_freq").get<std::size_t>();
      c.mode_pct = to_double(s.at("mode_pct"));
      c.seasonality = seasonality_from(s.at("seasonality"));
      c.acf = acf_from(s.at("acf"));
      f.categorical = std::move(c);
    }
  }

  if (const auto& o = j.at("outliers"); !o.is_null()) {
    OutlierReport r;
    r.defined = o.at("defined").get<bool>();
    r.q1 = to_double(o.at("q1"));
    r.q3 = to_double(o.at("q3"));
    r.iqr = to_double(o.at("iqr"));
    r.lower = to_double(o.at("lower"));
    r.upper = to_double(o.at("upper"));
    r.indices = o.at("indices").get<std::vector<std::size_t>>();
    r.confirmed = o.at("confirmed").get<std::vector<std::size_t>>();
    r.count = o.at("count").get<std::size_t>();
    r.rate = to_double(o.at("rate"));
    f.outliers = std::move(r);
  }

  for (const auto& s : j.at("slots"))
    f.slots.push_back({f.schema.name, s.at("factor").get<std::string>(), s.at("valid").get<bool>()});
  const auto& a = j.at("alignment");
  f.alignment = {a.at("slots").get<std::size_t>(), a.at("assigned").get<std::size_t>(),
                 a.at("dropped").get<std::size_t>(), a.at("merged_slots").get<std::size_t>()};
  return f;
}

CrossCorrelationResult correlation_from(const json& j) {
  return {j.at("a").get<std::string>(), j.at("b").get<std::string>(), to_opt(j.at("value")),
          j.at("lag").get<long long>()};
}

SixVsScores scores_from(const json& j) {
  SixVsScores s;
  s.vol = j.at("vol").get<unsigned long long>();
  s.varie = to_double(j.at("varie"));
  s.vel = to_duration(j.at("vel"));
  s.ver = to_opt(j.at("ver"));
  s.val = to_opt(j.at("val"));
  s.varia = to_opt(j.at("varia"));
  const auto& c = j.at("components");
  auto& sc = s.components;
  sc.nf = c.at("nf").get<unsigned long long>();
  sc.ni = c.at("ni").get<unsigned long long>();
  sc.forms = distribution_from(c.at("forms"));
  sc.pcdf = to_double(c.at("pcdf"));
  sc.mean_nas = to_double(c.at("mean_nas"));
  sc.mean_pti = to_double(c.at("mean_pti"));
  sc.mean_pmv_raw = to_double(c.at("mean_pmv_raw"));
  if (const auto& t = c.at("veracity_terms"); !t.is_null())
    sc.veracity = VeracityTerms{to_double(t.at("format")), to_double(t.at("spikes")), to_double(t.at("intervals")),
                                to_double(t.at("missing"))};
  sc.invalid_slots = c.at("invalid_slots").get<std::size_t>();
  sc.attempted_slots = c.at("attempted_slots").get<std::size_t>();
  sc.variability.nstd = to_opt(c.at("nstd"));
  sc.variability.po = to_double(c.at("po"));
  sc.variability.vc = to_opt(c.at("vc"));
  sc.variability.high_pairs = c.at("high_pairs").get<std::size_t>();
  sc.variability.defined_pairs = c.at("defined_pairs").get<std::size_t>();
  sc.variability.varia = s.varia;
  return s;
}

// Weights are printed with 12 digits, so their sum may miss 1 by a rounding
// step; restore it before validation.
json normalized_config(json c) {
  for (const char* key : {"veracity_weights", "variability_weights"}) {
    if (!c.contains(key) || !c[key].is_array()) continue;
    double sum = 0.0;
    for (const auto& w : c[key]) sum += w.get<double>();
    if (sum > 0.0)
      for (auto& w : c[key]) w = w.get<double>() / sum;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Human tables
// ---------------------------------------------------------------------------

using Row = std::vector<std::string>;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string pct(double v) { return fmt("%.4g%%", v * 100.0); }
std::string pct(const std::optional<double>& v) { return v ? pct(*v) : "-"; }
std::string number(double v) { return std::isnan(v) ? "-" : fmt("%.6g", v); }
std::string number(const std::optional<double>& v) { return v ? number(*v) : "-"; }

std::string grouped(unsigned long long v) {
  std::string s = std::to_string(v);
  for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3) s.insert(static_cast<std::size_t>(i), ",");
  return s;
}

std::string table(const std::vector<Row>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c >= width.size()) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

Row feature_row(const std::string& dim, const std::string& label, const DatasetProfile& p,
                const std::function<std::string(const FeatureProfile&)>& cell) {
  Row r{dim, label};
  for (const auto& f : p.features) r.push_back(cell(f));
  return r;
}

std::string human_report(const DatasetProfile& p, const std::vector<Recommendation>& recs) {
  const auto& s = p.scores;
  std::string out = "6Vs data characteristics: " + p.name + "\n\n";

  out += "Evaluation scores\n";
  out += table({{"6Vs", "Volume", "Variety", "Velocity", "Veracity", "Value", "Variability"},
                {"Evaluation metrics", "Vol", "Varie", "Vel", "Ver", "Val", "Varia"},
                {"Scores", grouped(s.vol), std::isinf(s.varie) ? "+inf" : number(s.varie), render_duration(s.vel),
                 number(s.ver), number(s.val), number(s.varia)}});

  out += "\nIndicators\n";
  Row header{"", ""};
  for (const auto& f : p.features) header.push_back(f.schema.name);
  std::vector<Row> rows{header};
  rows.push_back({"Volume", "NF / NI", std::to_string(p.nf) + " / " + grouped(p.ni)});
  rows.push_back(feature_row("Variety", "PSD/PUD/PSSD", p, [](const FeatureProfile& f) {
    return pct(f.form.cells.psd) + "/" + pct(f.form.cells.pud) + "/" + pct(f.form.cells.pssd);
  }));
  rows.push_back({"Velocity", "SDP", render_duration(s.vel)});
  rows.push_back(feature_row("Veracity", "CDF", p, [](const FeatureProfile& f) {
    return std::string(f.format.correct ? "Yes" : "No");
  }));
  rows.push_back({"", "PCDF", pct(s.components.pcdf)});
  rows.push_back(feature_row("", "NAS", p, [](const FeatureProfile& f) {
    return f.spikes ? std::to_string(f.spikes->nas) : std::string("-");
  }));
  rows.push_back(feature_row("", "PTI", p, [](const FeatureProfile& f) { return pct(f.intervals.pti); }));
  rows.push_back(feature_row("", "DTS/DTD", p, [](const FeatureProfile& f) {
    return std::to_string(f.duplicates.dts) + "/" + std::to_string(f.duplicates.dtd);
  }));
  rows.push_back(feature_row("", "PMV old", p, [](const FeatureProfile& f) { return pct(f.missing_old.pmv); }));
  rows.push_back(feature_row("", "PMV new", p, [](const FeatureProfile& f) { return pct(f.missing_new.pmv); }));
  rows.push_back(feature_row("", "SMS/MMS/LMS", p, [](const FeatureProfile& f) {
    const auto& m = f.missing_new;
    return std::to_string(m.sms) + "/" + std::to_string(m.mms) + "/" + std::to_string(m.lms);
  }));
  rows.push_back(feature_row("Value", "invalid factors", p, [](const FeatureProfile& f) {
    const auto bad = std::count_if(f.slots.begin(), f.slots.end(), [](const IndicatorSlot& x) { return !x.valid; });
    return std::to_string(bad) + "/" + std::to_string(f.slots.size());
  }));
  rows.push_back(feature_row("Variability", "outlier rate", p, [](const FeatureProfile& f) {
    return f.outliers && f.outliers->defined ? pct(f.outliers->rate) : std::string("-");
  }));
  out += table(rows);

  std::vector<const FeatureProfile*> cont, cat;
  for (const auto& f : p.features) (f.continuous ? cont : cat).push_back(&f);
  auto yes_no = [](const SeasonalityResult& r) { return std::string(r.seasonal ? "Yes" : "No"); };

  if (!cont.empty()) {
    out += "\nStatistical values (continuous)\n";
    Row h{""};
    for (const auto* f : cont) h.push_back(f->schema.name);
    std::vector<Row> t{h};
    auto add = [&](const std::string& label, const std::function<std::string(const ContinuousProfile&)>& cell) {
      Row r{label};
      for (const auto* f : cont) r.push_back(f->continuous->defined() ? cell(*f->continuous) : "-");
      t.push_back(std::move(r));
    };
    add("cardinality", [](const ContinuousProfile& c) { return std::to_string(c.cardinality); });
    add("min", [](const ContinuousProfile& c) { return number(c.min); });
    add("max", [](const ContinuousProfile& c) { return number(c.max); });
    add("mean", [](const ContinuousProfile& c) { return number(c.mean); });
    add("median", [](const ContinuousProfile& c) { return number(c.median); });
    add("std", [](const ContinuousProfile& c) { return number(c.std); });
    add("skewness", [](const ContinuousProfile& c) { return number(c.skewness); });
    add("excess kurtosis", [](const ContinuousProfile& c) { return number(c.excess_kurtosis); });
    add("1st qrt", [](const ContinuousProfile& c) { return number(c.q1); });
    add("3rd qrt", [](const ContinuousProfile& c) { return number(c.q3); });
    add("seasonality", [&](const ContinuousProfile& c) { return yes_no(c.seasonality); });
    add("acf[1]", [](const ContinuousProfile& c) {
      return c.acf && c.acf->size() > 1 ? number((*c.acf)[1]) : std::string("-");
    });
    out += table(t);
  }

  if (!cat.empty()) {
    out += "\nStatistical values (categorical)\n";
    Row h{""};
    for (const auto* f : cat) h.push_back(f->schema.name);
    std::vector<Row> t{h};
    auto add = [&](const std::string& label, const std::function<std::string(const CategoricalProfile&)>& cell) {
      Row r{label};
      for (const auto* f : cat) r.push_back(f->categorical->defined() ? cell(*f->categorical) : "-");
      t.push_back(std::move(r));
    };
    add("cardinality", [](const CategoricalProfile& c) { return std::to_string(c.cardinality); });
    add("mode", [](const CategoricalProfile& c) { return c.mode.value_or("-"); });
    add("mode freq", [](const CategoricalProfile& c) { return std::to_string(c.mode_freq); });
    add("mode pct", [](const CategoricalProfile& c) { return pct(c.mode_pct); });
    add("seasonality", [&](const CategoricalProfile& c) { return yes_no(c.seasonality); });
    out += table(t);
  }

  out += "\nCross correlation (max delay " + render_duration(p.config.max_cross_delay) + ", threshold " +
         number(p.config.correlation_threshold) + ")\n";
  std::vector<Row> corr{{"feature", "feature", "best value", "lag"}};
  for (const auto& c : p.correlations.pairs())
    corr.push_back({c.feature_a, c.feature_b, number(c.best_value), std::to_string(c.best_lag)});
  out += corr.size() > 1 ? table(corr) : "(no continuous feature pairs)\n";

  out += "\nRecommendations\n";
  if (recs.empty()) out += "(none)\n";
  for (const auto& r : recs) {
    out += "[" + std::string(to_string(r.severity)) + "] " + std::string(to_string(r.dimension)) + ": " + r.trigger +
           "\n    " + r.action + "\n";
  }
  return out;
}

}  // namespace

ReportFormat report_format_from_string(std::string_view s) {
  if (s == "machine") return ReportFormat::machine;
  if (s == "human") return ReportFormat::human;
  throw ConfigError("unknown report format '" + std::string(s) + "'");
}

json report_json(const DatasetProfile& p, const std::vector<Recommendation>& recs) {
  json j;
  j["report_version"] = 1;
  j["dataset"] = p.name;
  j["config"] = to_json(p.config);
  j["nf"] = p.nf;
  j["ni"] = p.ni;
  j["forms"] = distribution_json(p.forms);
  j["grid"] = p.grid.slots > 0 ? json{{"start", stamp(p.grid.start)},
                                      {"end", stamp(p.grid.end)},
                                      {"interval", secs(p.grid.interval)},
                                      {"slots", p.grid.slots}}
                               : json(nullptr);
  json features = json::array();
  for (const auto& f : p.features) features.push_back(feature_json(f));
  j["features"] = features;

  json pairs = json::array(), diagonal = json::array();
  for (const auto& c : p.correlations.pairs()) pairs.push_back(correlation_json(c));
  for (const auto& c : p.correlations.diagonal()) diagonal.push_back(correlation_json(c));
  j["correlations"] = {{"features", p.correlations.features()}, {"pairs", pairs}, {"diagonal", diagonal}};
  j["scores"] = scores_json(p.scores);

  json rejected = json::array();
  for (const auto& r : p.rejected_rows) rejected.push_back({{"row", r.row}, {"timestamp", r.timestamp}});
  j["rejected_rows"] = rejected;
  json log = json::array();
  for (const auto& e : p.log) log.push_back({{"stage", e.stage}, {"feature", e.feature}, {"message", e.message}});
  j["log"] = log;

  json rj = json::array();
  for (const auto& r : recs)
    rj.push_back({{"rule", r.rule},
                  {"dimension", to_string(r.dimension)},
                  {"feature", r.feature},
                  {"severity", to_string(r.severity)},
                  {"trigger", r.trigger},
                  {"action", r.action}});
  j["recommendations"] = rj;
  return j;
}

std::string render_json(const json& doc) {
  std::string out;
  write_value(doc, out, 0);
  out += "\n";
  return out;
}

std::string emit_report(const DatasetProfile& p, const std::vector<Recommendation>& recs, ReportFormat format) {
  return format == ReportFormat::machine ? render_json(report_json(p, recs)) : human_report(p, recs);
}

ParsedReport parse_report(std::string_view text) {
  ParsedReport out;
  DatasetProfile& p = out.profile;
  try {
    const json j = json::parse(text);
    if (j.at("report_version").get<int>() != 1) malformed("unsupported report_version");
    p.name = j.at("dataset").get<std::string>();
    p.config = config_from_json(normalized_config(j.at("config")));
    p.nf = j.at("nf").get<unsigned long long>();
    p.ni = j.at("ni").get<unsigned long long>();
    p.forms = distribution_from(j.at("forms"));
    if (const auto& g = j.at("grid"); !g.is_null()) {
      p.grid = {to_instant(g.at("start")), to_instant(g.at("end")), to_duration(g.at("interval")),
                g.at("slots").get<std::size_t>()};
    } else {
      p.grid.interval = p.config.expected_interval;
    }
    for (const auto& f : j.at("features")) p.features.push_back(feature_from(f));

    const auto& c = j.at("correlations");
    std::vector<CrossCorrelationResult> pairs, diagonal;
    for (const auto& e : c.at("pairs")) pairs.push_back(correlation_from(e));
    for (const auto& e : c.at("diagonal")) diagonal.push_back(correlation_from(e));
    p.correlations =
        CorrelationMatrix(c.at("features").get<std::vector<std::string>>(), std::move(pairs), std::move(diagonal));
    p.scores = scores_from(j.at("scores"));

    for (const auto& r : j.at("rejected_rows"))
      p.rejected_rows.push_back({r.at("row").get<std::size_t>(), r.at("timestamp").get<std::string>()});
    for (const auto& e : j.at("log"))
      p.log.push_back({e.at("stage").get<std::string>(), e.at("feature").get<std::string>(),
                       e.at("message").get<std::string>()});
    for (const auto& r : j.at("recommendations"))
      out.recommendations.push_back({r.at("rule").get<std::string>(),
                                     dimension_from_string(r.at("dimension").get<std::string>()),
                                     r.at("feature").get<std::string>(),
                                     severity_from_string(r.at("severity").get<std::string>()),
                                     r.at("trigger").get<std::string>(), r.at("action").get<std::string>()});
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  return out;
}

std::string score_summary(const SixVsScores& s) {
  auto opt_text = [](const std::optional<double>& v) { return v ? render_number(*v) : std::string("undefined"); };
  std::string varie = std::isinf(s.varie) ? "+inf" : render_number(s.varie);
  return "Vol=" + std::to_string(s.vol) + " Varie=" + varie + " Vel=" + render_duration(s.vel) +
         " Ver=" + opt_text(s.ver) + " Val=" + opt_text(s.val) + " Varia=" + opt_text(s.varia);
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open report for writing", path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("cannot write report", path);
}

}  // namespace sixvs
