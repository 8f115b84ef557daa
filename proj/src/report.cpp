#include "adcgap/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "adcgap/derived.hpp"
#include "csv.hpp"

namespace adcgap {

namespace {

std::string num(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::string series_label(const SurveyRecord& r, const PlotSpec& spec) {
  if (!spec.split) return "all";
  if (spec.split->kind == SeriesSplit::Kind::architecture)
    return r.architecture ? std::string(to_string(*r.architecture)) : "unknown";
  const Predicate& p = spec.split->predicate;
  return p.matches(r) ? p.describe() : p.negated().describe();
}

void sort_rows(std::vector<SeriesRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const SeriesRow& a, const SeriesRow& b) {
    if (a.label != b.label) return a.label < b.label;
    if (a.year != b.year) return a.year < b.year;
    return a.id < b.id;
  });
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string_view to_string(Scale scale) { return scale == Scale::linear ? "linear" : "log10"; }

Scale parse_scale(std::string_view text) {
  if (text == "linear" || text == "lin") return Scale::linear;
  if (text == "log10" || text == "log") return Scale::log10;
  throw std::invalid_argument("unknown scale '" + std::string(text) + "' (use linear or log10)");
}

std::string format_sig(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string format_display(double value, std::string_view key, int digits) {
  const DisplayUnit unit = display_unit(key);
  std::string out = format_sig(value * unit.scale, digits);
  if (!unit.label.empty()) {
    out += ' ';
    out += unit.label;
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string dataset_hash(const Dataset& dataset) {
  const std::uint64_t h =
      fnv1a64(to_converter_csv(dataset.records()) + to_transceiver_csv(dataset.transceivers()));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SeriesFile emit_series(const Dataset& dataset, const PlotSpec& spec) {
  require_metric_key(spec.x_key);
  require_metric_key(spec.y_key);
  SeriesFile file;
  for (const auto& r : dataset.records()) {
    const DerivedMetrics m = derive_all(r, spec.osr);
    const auto x = metric_value(r, m, spec.x_key);
    const auto y = metric_value(r, m, spec.y_key);
    if (!x || !y) continue;
    file.rows.push_back({*x, *y, r.id, r.year, series_label(r, spec)});
  }
  if (file.rows.empty())
    throw std::invalid_argument("nothing to plot: no record has both " + spec.x_key + " and " + spec.y_key);
  sort_rows(file.rows);
  file.provenance = "x=" + spec.x_key + " y=" + spec.y_key + " osr=" + num(spec.osr) +
                    " split=" + (spec.split ? (spec.split->kind == SeriesSplit::Kind::architecture
                                                   ? std::string("architecture")
                                                   : spec.split->predicate.describe())
                                            : std::string("none")) +
                    " dataset=" + dataset_hash(dataset);
  return file;
}

SeriesFile emit_series(const EnvelopeSeries& series, const PlotSpec& spec) {
  if (series.points.empty()) throw std::invalid_argument("nothing to plot: empty envelope");
  SeriesFile file;
  for (const auto& p : series.points)
    file.rows.push_back({static_cast<double>(p.year), p.value, p.record_id, p.year, "envelope"});
  sort_rows(file.rows);
  file.provenance = "envelope of " + series.metric_key + " (" + std::string(to_string(series.direction)) +
                    ") x=year y=" + (spec.y_key.empty() ? series.metric_key : spec.y_key);
  return file;
}

std::string to_csv(const SeriesFile& file) {
  std::string out = "# " + file.provenance + "\n";
  for (std::size_t i = 0; i < file.header.size(); ++i) {
    if (i) out += ',';
    out += file.header[i];
  }
  out += '\n';
  for (const auto& row : file.rows)
    out += num(row.x) + ',' + num(row.y) + ',' + csv::quote(row.id) + ',' + std::to_string(row.year) +
           ',' + csv::quote(row.label) + '\n';
  return out;
}

std::string metrics_csv(const Dataset& dataset, double osr) {
  std::string out =
      "id,year,enob,sndr_db,bandwidth_hz,nyquist_hz,ebit_j_per_bit,density_hz_per_mm2,fom_s_db,"
      "speed_resolution\n";
  for (const auto& r : dataset.records()) {
    const DerivedMetrics m = derive_all(r, osr);
    out += csv::quote(r.id) + ',' + std::to_string(r.year) + ',' + opt_num(m.enob) + ',' +
           opt_num(m.sndr) + ',' + num(m.bandwidth) + ',' + num(m.nyquist_rate) + ',' +
           num(m.single_bit_energy) + ',' + opt_num(m.sampling_density) + ',' +
           opt_num(m.schreier_fom) + ',' + opt_num(m.speed_resolution) + '\n';
  }
  return out;
}

std::string budget_text(const PlatformSpec& platform, const AllocationPolicy& policy,
                        const BudgetCascade& b) {
  auto line = [](std::string_view label, double area, double power) {
    return pad(std::string(label), 12) + pad(format_sig(area) + " mm2", 14) + format_sig(power) + " W\n";
  };
  std::string out;
  out += "platform: " + format_sig(platform.chip_area) + " mm2, " + format_sig(platform.tdp) + " W, " +
         std::to_string(platform.core_count) + " cores\n";
  out += "policy: noc " + format_sig(policy.noc_fraction) + ", wireless " +
         format_sig(policy.wireless_share_of_noc) + " of noc, conversion " +
         format_sig(policy.conversion_share_of_wireless) + " of wireless, at " +
         format_sig(policy.target_datarate * 1e-9) + " Gb/s\n";
  out += line("per core", b.per_core_area, b.per_core_power);
  out += line("noc", b.noc_area, b.noc_power);
  out += line("wireless", b.wireless_area, b.wireless_power);
  out += line("converter", b.converter_area_target, b.converter_power_target);
  out += "wireless energy per bit:  " + format_display(b.wireless_energy_per_bit, "ebit") + "\n";
  out += "converter energy per bit: " + format_display(b.converter_energy_per_bit_target, "ebit") + "\n";
  return out;
}

std::string budget_csv(const BudgetCascade& b) {
  std::string out = "quantity,value,unit\n";
  auto row = [&](std::string_view name, double value, std::string_view unit) {
    out += std::string(name) + ',' + num(value) + ',' + std::string(unit) + '\n';
  };
  row("per_core_area", b.per_core_area, "mm2");
  row("per_core_power", b.per_core_power, "W");
  row("noc_area", b.noc_area, "mm2");
  row("noc_power", b.noc_power, "W");
  row("wireless_area", b.wireless_area, "mm2");
  row("wireless_power", b.wireless_power, "W");
  row("wireless_energy_per_bit", b.wireless_energy_per_bit, "J/bit");
  row("converter_area_target", b.converter_area_target, "mm2");
  row("converter_power_target", b.converter_power_target, "W");
  row("converter_energy_per_bit_target", b.converter_energy_per_bit_target, "J/bit");
  return out;
}

std::string density_text(const DensityComparison& d) {
  return "best converter sampling density:  " + format_display(d.converter_density, "density") + " (" +
         d.converter_id + ")\nbest transceiver bitrate density: " +
         format_sig(d.transceiver_density * 1e-9) + " Gb/s/mm2 (" + d.transceiver_id +
         ")\nratio: " + format_sig(d.ratio) + "\n";
}

std::string gap_text(const GapReport& report, const FeasibilityAssessment* feasibility) {
  const RequirementSpec& s = report.spec;
  std::string out;
  out += "requirement set: " + s.name + " (osr " + format_sig(report.osr) + ")\n";
  out += "  bandwidth >= " + format_display(s.min_bandwidth, "bandwidth_hz") + ", enob >= " +
         format_sig(s.min_enob) + " bits, area <= " + format_display(s.max_area, "area_mm2") +
         ", energy <= " + format_display(s.max_energy_per_bit, "ebit") + "\n";
  out += "records: " + std::to_string(report.record_count) + ", overall pass: " +
         std::to_string(report.overall_pass) + "\n\n";
  out += pad("criterion", 11) + pad("pass", 6) + pad("fail", 6) + pad("unknown", 9) + "best design\n";
  for (Criterion c : kCriteria) {
    const CriterionSummary& cs = report[c];
    out += pad(std::string(to_string(c)), 11) + pad(std::to_string(cs.pass), 6) +
           pad(std::to_string(cs.fail), 6) + pad(std::to_string(cs.unknown), 9);
    if (cs.best_id) {
      out += *cs.best_id + " (" + format_display(*cs.best_measured, criterion_metric(c)) + ", margin " +
             format_sig(*cs.best_margin) + ")";
    } else {
      out += "-";
    }
    out += '\n';
  }
  out += "\nnearest miss: " + report.nearest_miss_id.value_or("-") + "\n";
  if (report.nearest_miss_id) {
    const RecordVerdict* v = report.verdict(*report.nearest_miss_id);
    for (Criterion c : kCriteria) {
      const CriterionResult& cr = (*v)[c];
      out += "  " + pad(std::string(to_string(c)), 10) + pad(std::string(to_string(cr.outcome)), 8);
      if (cr.margin) out += "margin " + format_sig(*cr.margin);
      out += '\n';
    }
  }
  if (feasibility) {
    out += "\nfeasibility projection\n";
    for (const auto& p : feasibility->projections) {
      out += "  " + pad(std::string(to_string(p.criterion)), 10) +
             pad(std::string(to_string(p.status)), 13);
      if (p.year) out += "year " + format_sig(*p.year, 5);
      out += '\n';
    }
    out += "  overall: " + (feasibility->overall_year ? format_sig(*feasibility->overall_year, 5)
                                                      : std::string("not projected")) +
           "\n";
  }
  return out;
}

std::string verdicts_csv(const GapReport& report) {
  std::string out = "id,year";
  for (Criterion c : kCriteria) {
    const std::string name(to_string(c));
    out += ',' + name + "_outcome," + name + "_measured," + name + "_margin";
  }
  out += ",overall\n";
  for (const auto& v : report.verdicts) {
    out += csv::quote(v.record_id) + ',' + std::to_string(v.year);
    for (Criterion c : kCriteria) {
      const CriterionResult& cr = v[c];
      out += ',' + std::string(to_string(cr.outcome)) + ',' + opt_num(cr.measured) + ',' + opt_num(cr.margin);
    }
    out += std::string(",") + (v.overall_pass() ? "pass" : "fail") + '\n';
  }
  return out;
}

std::string transceiver_verdicts_csv(std::span<const TransceiverVerdict> verdicts) {
  std::string out =
      "id,throughput_outcome,throughput_margin,energy_outcome,energy_margin,area_outcome,area_margin,"
      "overall\n";
  for (const auto& v : verdicts) {
    out += csv::quote(v.record_id);
    for (const auto& cr : v.criteria)
      out += ',' + std::string(to_string(cr.outcome)) + ',' + opt_num(cr.margin);
    out += std::string(",") + (v.overall_pass() ? "pass" : "fail") + '\n';
  }
  return out;
}

std::string trend_text(std::string_view metric_key, FitAxis axis, Selector selector,
                       const SubsetFit& fit, std::optional<TimePoint> anchor,
                       std::optional<double> threshold) {
  std::string out = "metric: " + std::string(metric_key) + ", axis: " + std::string(to_string(axis)) +
                    ", selector: " + std::string(to_string(selector)) + "\n";
  if (const auto* t = std::get_if<TrendFit>(&fit.fit)) {
    out += "points: " + std::to_string(t->n_points) + ", r^2: " + format_sig(t->r_squared) + "\n";
    if (auto d = t->doubling_time()) out += "doubling time: " + format_sig(*d) + " years\n";
    if (auto h = t->halving_time()) out += "halving time: " + format_sig(*h) + " years\n";
    if (t->slope == 0.0) out += "flat trend\n";
    out += "fitted value at " + std::to_string(t->reference_year) + ": " +
           format_display(extrapolate(*t, t->reference_year), metric_key) + "\n";
    if (anchor && threshold) {
      out += "anchor: " + format_sig(anchor->year, 6) + ", " + format_display(anchor->value, metric_key) + "\n";
      const Direction goal = preferred_direction(metric_key);
      const auto year = threshold_year(*t, *anchor, *threshold, goal);
      out += "threshold " + format_display(*threshold, metric_key) + ": " +
             (year ? "projected year " + format_sig(*year, 5) : std::string("unreachable")) + "\n";
    }
  } else {
    const auto& p = std::get<PowerLawFit>(fit.fit);
    out += "points: " + std::to_string(p.n_points) + ", r^2: " + format_sig(p.r_squared) + "\n";
    out += "exponent: " + format_sig(p.exponent) + "\n";
  }
  out += "reference tendencies:";
  bool any = false;
  for (const auto& r : reference_trends()) {
    if (r.axis != axis) continue;
    out += std::string(any ? ", " : " ") + std::string(r.name);
    any = true;
  }
  out += "\n";
  return out;
}

std::string frontier_csv(const Dataset& dataset, std::span<const Objective> objectives,
                         const FrontierResult& result, double osr) {
  std::string out = "id,year";
  for (const auto& o : objectives) out += ',' + o.metric_key;
  out += '\n';
  for (const auto& id : result.ids) {
    const SurveyRecord* r = dataset.find(id);
    const DerivedMetrics m = derive_all(*r, osr);
    out += csv::quote(id) + ',' + std::to_string(r->year);
    for (const auto& o : objectives) out += ',' + opt_num(metric_value(*r, m, o.metric_key));
    out += '\n';
  }
  return out;
}

std::string envelope_csv(const EnvelopeSeries& series) {
  std::string out = "year," + series.metric_key + ",id\n";
  for (const auto& p : series.points)
    out += std::to_string(p.year) + ',' + num(p.value) + ',' + csv::quote(p.record_id) + '\n';
  return out;
}

}  // namespace adcgap
