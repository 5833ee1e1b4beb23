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

#include "sixvs/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sixvs/parallel.hpp"

namespace sixvs {
namespace {

template <typename Map>
std::optional<ValueBounds> lookup(const Map& m, const std::string& key) {
  const auto it = m.find(key);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::string count_text(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

// Stage 1 and 2 for one feature; returns the duplicate-resolved series.
TimedSeries understand_feature(const Feature& f, const FeatureFormat& format, const FeatureForm& form,
                               const ProfilerConfig& config, FeatureProfile& fp, std::vector<PipelineEvent>& log) {
  const std::string& name = f.schema.name;
  fp.schema = f.schema;

  fp.duplicates = detect_duplicates(f.series);
  TimedSeries resolved = resolve_duplicates(f.series, fp.duplicates, config.duplicate_policy, &fp.resolutions);
  if (!fp.duplicates.groups.empty())
    log.push_back({"timestamp", name,
                   "resolved " + count_text(fp.duplicates.dts, "same-value group") + " and " +
                       count_text(fp.duplicates.dtd, "differing group")});
  fp.intervals = interval_analysis(resolved, config.expected_interval, config.interval_tolerance);
  if (!fp.intervals.pti) log.push_back({"timestamp", name, "fewer than two samples; PTI undefined"});

  fp.format = format;
  if (format.degenerate) log.push_back({"value", name, "no non-missing cells; format check vacuous"});
  fp.form = form;
  fp.missing_old = analyze_missing(resolved, config.sms_max, config.mms_max, config.expected_interval);

  if (f.schema.kind == FeatureKind::continuous) {
    fp.spikes = detect_spikes(resolved, config.spike_k, lookup(config.spike_bounds, name));
    if (fp.spikes->insufficient_data) log.push_back({"value", name, "fewer than three values; spike check skipped"});
    fp.continuous = continuous_profile(resolved, config);
    fp.outliers = detect_outliers(resolved, config.outlier_coefficient, config.quantile_method,
                                  lookup(config.physical_bounds, name));
    if (!fp.outliers->defined) log.push_back({"value", name, "fewer than four values; outliers undefined"});
    fp.slots = indicator_slots(name, *fp.continuous);
  } else {
    fp.categorical = categorical_profile(resolved, config);
    fp.slots = indicator_slots(name, *fp.categorical);
  }
  for (const auto& slot : fp.slots)
    if (!slot.valid) log.push_back({"value", name, "indicator " + slot.factor + " undefined"});
  return resolved;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

bool close(std::optional<double> a, std::optional<double> b, double tol) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  if (std::isinf(*a) || std::isinf(*b)) return *a == *b;
  return std::abs(*a - *b) <= tol * std::max({1.0, std::abs(*a), std::abs(*b)});
}

}  // namespace

const FeatureProfile* DatasetProfile::find(std::string_view feature) const noexcept {
  for (const auto& f : features)
    if (f.schema.name == feature) return &f;
  return nullptr;
}

DatasetProfile run_pipeline(const Dataset& ds, const ProfilerConfig& config) {
  config.validate();
  DatasetProfile p;
  p.name = ds.name;
  p.config = config;
  p.nf = ds.nf();
  p.ni = ds.ni;
  p.rejected_rows = ds.rejected_rows;
  for (const auto& r : ds.rejected_rows)
    p.log.push_back({"ingestion", "", "row " + std::to_string(r.row) + ": unparseable timestamp skipped"});

  const std::size_t nf = ds.nf();
  const FormatReport formats = check_formats(ds);
  const FormReport forms = classify_forms(ds);
  p.forms = forms.overall;

  p.features.resize(nf);
  std::vector<TimedSeries> resolved(nf);
  std::vector<std::vector<PipelineEvent>> events(nf);
  detail::parallel_for(nf, [&](std::size_t i) {
    resolved[i] = understand_feature(ds.features[i], formats.features[i], forms.features[i], config, p.features[i],
                                     events[i]);
  });

  // Feature understanding on a common grid.
  std::optional<Instant> first, last;
  for (const auto& s : resolved) {
    if (s.timestamps.empty()) continue;
    first = first ? std::min(*first, s.timestamps.front()) : s.timestamps.front();
    last = last ? std::max(*last, s.timestamps.back()) : s.timestamps.back();
  }
  Dataset aligned;
  aligned.name = ds.name;
  aligned.features.resize(nf);
  if (first) {
    p.grid = default_grid(*first, *last, config.expected_interval, config.grid_start, config.grid_end);
    detail::parallel_for(nf, [&](std::size_t i) {
      AlignmentResult a = align_to_grid(resolved[i], p.grid, config.grid_conflict_policy);
      FeatureProfile& fp = p.features[i];
      fp.alignment = {p.grid.slots, a.assigned, a.dropped, a.merged_slots};
      if (a.dropped > 0)
        events[i].push_back({"feature", fp.schema.name, count_text(a.dropped, "value") + " outside the grid dropped"});
      fp.missing_new = analyze_missing(a.series, config.sms_max, config.mms_max, config.expected_interval);
      aligned.features[i] = {ds.features[i].schema, std::move(a.series), {}};
    });
    aligned.ni = p.grid.slots;
  } else {
    p.grid.interval = config.expected_interval;
    p.log.push_back({"feature", "", "no timestamps; alignment skipped"});
    for (std::size_t i = 0; i < nf; ++i) aligned.features[i].schema = ds.features[i].schema;
  }
  for (auto& e : events) p.log.insert(p.log.end(), e.begin(), e.end());

  p.correlations =
      correlation_matrix(aligned, config.max_cross_delay, config.expected_interval, config.correlation_mode);
  for (const auto& pair : p.correlations.pairs())
    if (!pair.best_value)
      p.log.push_back({"feature", pair.feature_a + "/" + pair.feature_b, "cross-correlation undefined"});

  p.scores = compute_scores(p);
  return p;
}

SixVsScores compute_scores(const DatasetProfile& p) {
  SixVsScores s;
  auto& c = s.components;
  c.nf = p.nf;
  c.ni = p.ni;
  s.vol = score_volume(p.nf, p.ni);

  std::vector<FeatureForm> forms;
  for (const auto& f : p.features) forms.push_back(f.form);
  c.forms = form_distribution(forms);
  s.varie = score_variety(c.forms);
  s.vel = score_velocity(p.config);

  std::size_t correct = 0;
  std::vector<double> nas, pti, pmv, stds, rates;
  std::vector<IndicatorSlot> slots;
  for (const auto& f : p.features) {
    correct += f.format.correct ? 1 : 0;
    if (f.spikes) nas.push_back(static_cast<double>(f.spikes->nas));
    if (f.intervals.pti) pti.push_back(*f.intervals.pti);
    pmv.push_back(f.missing_old.pmv);
    if (f.continuous && f.continuous->defined()) stds.push_back(f.continuous->std);
    if (f.outliers && f.outliers->defined) rates.push_back(f.outliers->rate);
    slots.insert(slots.end(), f.slots.begin(), f.slots.end());
  }
  c.pcdf = p.features.empty() ? 1.0 : static_cast<double>(correct) / static_cast<double>(p.features.size());
  c.mean_nas = mean_of(nas);
  c.mean_pti = pti.empty() ? 1.0 : mean_of(pti);
  c.mean_pmv_raw = mean_of(pmv);
  if (!pti.empty()) {
    c.veracity = veracity_terms(c.pcdf, c.mean_nas, p.ni, c.mean_pti, c.mean_pmv_raw);
    s.ver = score_veracity(c.pcdf, c.mean_nas, p.ni, c.mean_pti, c.mean_pmv_raw, p.config.veracity_weights);
  }

  c.attempted_slots = slots.size();
  c.invalid_slots = static_cast<std::size_t>(
      std::count_if(slots.begin(), slots.end(), [](const IndicatorSlot& x) { return !x.valid; }));
  s.val = score_value(slots);

  c.variability = score_variability(stds, rates, p.correlations, p.config.correlation_threshold,
                                    p.config.variability_weights);
  s.varia = c.variability.varia;
  return s;
}

std::vector<std::string> inconsistent_scores(const DatasetProfile& p, double tol) {
  const SixVsScores r = compute_scores(p);
  const SixVsScores& s = p.scores;
  std::vector<std::string> out;
  if (r.vol != s.vol) out.emplace_back("vol");
  if (!close(r.varie, s.varie, tol)) out.emplace_back("varie");
  if (r.vel != s.vel) out.emplace_back("vel");
  if (!close(r.ver, s.ver, tol)) out.emplace_back("ver");
  if (!close(r.val, s.val, tol)) out.emplace_back("val");
  if (!close(r.varia, s.varia, tol)) out.emplace_back("varia");
  return out;
}

}  // namespace sixvs
