#include "adcgap/gap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adcgap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_minimum(Criterion c) { return c == Criterion::bandwidth || c == Criterion::enob; }

/// Orientation-normalized margin: >= 1 means the threshold is met.
double margin_for(double measured, double threshold, bool minimum) {
  if (minimum) {
    if (threshold == 0.0) return measured >= 0.0 ? kInf : -kInf;
    return measured / threshold;
  }
  if (threshold == kInf) return kInf;
  return threshold / measured;
}

CriterionResult judge(std::optional<double> measured, double threshold, bool minimum) {
  CriterionResult r;
  r.measured = measured;
  if (!measured) return r;
  r.margin = margin_for(*measured, threshold, minimum);
  r.outcome = *r.margin >= 1.0 ? Outcome::pass : Outcome::fail;
  return r;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::domain_error(message);
}

void validate_range(const Range& r, const char* what) {
  require(!std::isnan(r.low) && !std::isnan(r.high) && r.low <= r.high,
          std::string(what) + " range must satisfy low <= high");
}

}  // namespace

void validate(const RequirementSpec& s) {
  const double values[] = {s.min_bandwidth, s.min_nyquist, s.max_osr,
                           s.min_enob,      s.max_area,    s.max_energy_per_bit};
  for (double v : values) require(!std::isnan(v) && v >= 0.0, "requirement thresholds must be non-negative");
  require(s.max_osr >= 1.0, "max_osr must be at least 1");
  require(s.max_area > 0.0 && s.max_energy_per_bit > 0.0, "area and energy limits must be positive");
  require(std::isfinite(s.min_bandwidth) && std::isfinite(s.min_enob),
          "minimum thresholds must be finite");
  require(std::abs(s.min_nyquist - 2.0 * s.min_bandwidth) <= 1e-12 * s.min_nyquist,
          "min_nyquist must equal twice min_bandwidth");
}

void validate(const ScenarioSpec& s) {
  validate_range(s.transmission_range, "transmission");
  validate_range(s.node_density, "node density");
  validate_range(s.network_throughput, "throughput");
  validate_range(s.latency, "latency");
  validate_range(s.bit_error_rate, "BER");
  validate_range(s.transceiver_energy, "transceiver energy");
  validate_range(s.transceiver_area, "transceiver area");
}

RequirementSpec requirement_preset(std::string_view name) {
  RequirementSpec s;
  s.min_bandwidth = 10e9;
  s.min_nyquist = 20e9;
  s.max_osr = 4.0;
  s.max_area = 0.1;
  s.max_energy_per_bit = 1e-12;
  if (name == "table2-adc") {
    s.name = "table2-adc";
    s.min_enob = 4.0;
  } else if (name == "table2-adc-1bit") {
    s.name = "table2-adc-1bit";
    s.min_enob = 1.0;
  } else {
    throw std::invalid_argument("unknown requirement preset '" + std::string(name) + "'");
  }
  return s;
}

ScenarioSpec scenario_preset(std::string_view name) {
  if (name != "table1-scenario")
    throw std::invalid_argument("unknown scenario preset '" + std::string(name) + "'");
  ScenarioSpec s;
  s.name = "table1-scenario";
  s.transmission_range = {1e-3, 0.1};
  s.node_density = {10.0, 1000.0};
  s.network_throughput = {10e9, 100e9};
  s.latency = {1e-9, 100e-9};
  s.bit_error_rate = {1e-15, 1e-15};
  s.transceiver_energy = {1e-12, 10e-12};
  s.transceiver_area = {0.01, 1.0};
  return s;
}

bool is_requirement_preset(std::string_view name) {
  return name == "table2-adc" || name == "table2-adc-1bit";
}
bool is_scenario_preset(std::string_view name) { return name == "table1-scenario"; }

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::bandwidth: return "bandwidth";
    case Criterion::enob: return "enob";
    case Criterion::area: return "area";
    case Criterion::energy: return "energy";
  }
  return "?";
}

Criterion parse_criterion(std::string_view text) {
  for (Criterion c : kCriteria)
    if (to_string(c) == text) return c;
  throw std::invalid_argument("unknown criterion '" + std::string(text) + "'");
}

std::string_view criterion_metric(Criterion c) {
  switch (c) {
    case Criterion::bandwidth: return "bandwidth_hz";
    case Criterion::enob: return "enob";
    case Criterion::area: return "area_mm2";
    case Criterion::energy: return "ebit";
  }
  return "";
}

double criterion_threshold(const RequirementSpec& spec, Criterion c) {
  switch (c) {
    case Criterion::bandwidth: return spec.min_bandwidth;
    case Criterion::enob: return spec.min_enob;
    case Criterion::area: return spec.max_area;
    case Criterion::energy: return spec.max_energy_per_bit;
  }
  return 0.0;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(Projection::Status s) {
  switch (s) {
    case Projection::Status::already_met: return "already_met";
    case Projection::Status::projected: return "projected";
    case Projection::Status::unreachable: return "unreachable";
    case Projection::Status::no_trend: return "no_trend";
  }
  return "?";
}

bool RecordVerdict::overall_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& r) { return r.outcome == Outcome::pass; });
}

int RecordVerdict::non_passing() const {
  return static_cast<int>(std::count_if(criteria.begin(), criteria.end(), [](const CriterionResult& r) {
    return r.outcome != Outcome::pass;
  }));
}

std::optional<double> RecordVerdict::worst_margin() const {
  std::optional<double> worst;
  for (const auto& r : criteria)
    if (r.margin && (!worst || *r.margin < *worst)) worst = r.margin;
  return worst;
}

RecordVerdict evaluate_record(const SurveyRecord& record, const DerivedMetrics& metrics,
                              const RequirementSpec& spec) {
  RecordVerdict v;
  v.record_id = record.id;
  v.year = record.year;
  for (Criterion c : kCriteria) {
    const auto measured = metric_value(record, metrics, criterion_metric(c));
    v.criteria[static_cast<std::size_t>(c)] = judge(measured, criterion_threshold(spec, c), is_minimum(c));
  }
  return v;
}

const RecordVerdict* GapReport::verdict(std::string_view id) const {
  const auto it = std::find_if(verdicts.begin(), verdicts.end(),
                               [&](const RecordVerdict& v) { return v.record_id == id; });
  return it == verdicts.end() ? nullptr : &*it;
}

GapReport gap_report(const Dataset& dataset, const RequirementSpec& spec, double osr) {
  validate(spec);
  if (dataset.records().empty()) throw std::invalid_argument("gap report: dataset has no converter records");
  if (osr > spec.max_osr)
    throw std::domain_error("gap report: oversampling ratio exceeds the spec's max_osr");

  GapReport report;
  report.spec = spec;
  report.osr = osr;
  report.record_count = static_cast<int>(dataset.records().size());

  for (const auto& r : dataset.records()) {
    report.verdicts.push_back(evaluate_record(r, derive_all(r, osr), spec));
    const RecordVerdict& v = report.verdicts.back();
    if (v.overall_pass()) ++report.overall_pass;

    for (Criterion c : kCriteria) {
      const CriterionResult& cr = v[c];
      CriterionSummary& s = report.criteria[static_cast<std::size_t>(c)];
      switch (cr.outcome) {
        case Outcome::pass: ++s.pass; break;
        case Outcome::fail: ++s.fail; break;
        case Outcome::unknown: ++s.unknown; break;
      }
      if (!cr.margin) continue;
      if (!s.best_margin || *cr.margin > *s.best_margin ||
          (*cr.margin == *s.best_margin && v.record_id < *s.best_id)) {
        s.best_margin = cr.margin;
        s.best_measured = cr.measured;
        s.best_id = v.record_id;
        s.best_year = v.year;
      }
    }
  }

  const RecordVerdict* nearest = nullptr;
  for (const auto& v : report.verdicts) {
    if (v.overall_pass()) continue;
    if (!nearest) {
      nearest = &v;
      continue;
    }
    const double worst = v.worst_margin().value_or(-kInf);
    const double best_worst = nearest->worst_margin().value_or(-kInf);
    if (v.non_passing() != nearest->non_passing()) {
      if (v.non_passing() < nearest->non_passing()) nearest = &v;
    } else if (worst != best_worst) {
      if (worst > best_worst) nearest = &v;
    } else if (v.record_id < nearest->record_id) {
      nearest = &v;
    }
  }
  if (nearest) report.nearest_miss_id = nearest->record_id;
  return report;
}

FeasibilityAssessment feasibility_assessment(const GapReport& report,
                                             const std::map<Criterion, TrendFit>& fits,
                                             const std::map<Criterion, TimePoint>& anchors) {
  FeasibilityAssessment out;
  bool complete = true;
  double latest = -kInf;

  for (Criterion c : kCriteria) {
    const CriterionSummary& summary = report[c];
    Projection p;
    p.criterion = c;
    p.threshold = criterion_threshold(report.spec, c);

    const auto anchor_it = anchors.find(c);
    const bool have_anchor = anchor_it != anchors.end() || summary.best_measured.has_value();
    if (anchor_it != anchors.end()) {
      p.anchor = anchor_it->second;
    } else if (summary.best_measured) {
      p.anchor = {static_cast<double>(summary.best_year), *summary.best_measured};
    }

    const auto fit_it = fits.find(c);
    if (summary.pass > 0) {
      p.status = Projection::Status::already_met;
      p.year = p.anchor.year;
    } else if (!have_anchor || fit_it == fits.end()) {
      p.status = Projection::Status::no_trend;
    } else {
      const Direction goal = is_minimum(c) ? Direction::maximize : Direction::minimize;
      p.year = threshold_year(fit_it->second, p.anchor, p.threshold, goal);
      p.status = p.year ? Projection::Status::projected : Projection::Status::unreachable;
    }

    if (p.year) {
      latest = std::max(latest, *p.year);
    } else {
      complete = false;
    }
    out.projections.push_back(p);
  }
  if (complete) out.overall_year = latest;
  return out;
}

bool TransceiverVerdict::overall_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& r) { return r.outcome == Outcome::pass; });
}

TransceiverVerdict evaluate_transceiver(const TransceiverRecord& record, const ScenarioSpec& spec) {
  validate(spec);
  TransceiverVerdict v;
  v.record_id = record.id;
  v.criteria[0] = judge(record.bitrate, spec.network_throughput.low, true);
  v.criteria[1] = judge(record.power / record.bitrate, spec.transceiver_energy.high, false);
  v.criteria[2] = judge(record.area, spec.transceiver_area.high, false);
  return v;
}

}  // namespace adcgap
