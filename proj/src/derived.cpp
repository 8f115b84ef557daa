#include "adcgap/derived.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "adcgap/metrics.hpp"

namespace adcgap {

DerivedMetrics derive_all(const SurveyRecord& record, double osr) {
  DerivedMetrics m;
  m.osr = osr;
  m.nyquist_rate = nyquist_rate(record.sample_rate, osr);
  m.bandwidth = signal_bandwidth(record.sample_rate, osr);
  m.single_bit_energy = single_bit_energy(record.power, record.sample_rate, osr);
  if (record.area) m.sampling_density = sampling_density(m.nyquist_rate, *record.area);

  m.sndr = record.sndr;
  m.enob = record.enob;
  if (!m.enob && m.sndr) m.enob = enob_from_sndr(*m.sndr);
  if (!m.sndr && m.enob && *m.enob >= 0.0) m.sndr = sndr_from_enob(*m.enob);

  if (m.sndr) m.schreier_fom = schreier_fom(*m.sndr, record.sample_rate, record.power);
  if (m.enob) m.speed_resolution = record.sample_rate * std::exp2(*m.enob);

  if (!record.resolution_complete())
    m.warnings.push_back("record '" + record.id +
                         "' has neither SNDR nor ENOB; resolution metrics are absent");
  else if (m.enob && *m.enob < 0.0)
    m.warnings.push_back("record '" + record.id + "' has negative ENOB");
  return m;
}

std::string_view to_string(Direction direction) {
  return direction == Direction::maximize ? "max" : "min";
}

Direction parse_direction(std::string_view text) {
  if (text == "max" || text == "maximize") return Direction::maximize;
  if (text == "min" || text == "minimize") return Direction::minimize;
  throw std::invalid_argument("unknown direction '" + std::string(text) + "' (use min or max)");
}

const std::vector<std::string>& metric_keys() {
  static const std::vector<std::string> keys = {
      "year",         "tech_nm",    "power_w", "fs_hz",   "area_mm2", "enob",
      "sndr_db",      "bandwidth_hz", "nyquist_hz", "ebit", "density", "fom_s",
      "speed_resolution"};
  return keys;
}

bool is_metric_key(std::string_view key) {
  const auto& keys = metric_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

void require_metric_key(std::string_view key) {
  if (!is_metric_key(key)) throw std::invalid_argument("unknown metric '" + std::string(key) + "'");
}

Direction preferred_direction(std::string_view key) {
  require_metric_key(key);
  if (key == "ebit" || key == "area_mm2" || key == "power_w" || key == "tech_nm")
    return Direction::minimize;
  return Direction::maximize;
}

std::optional<double> metric_value(const SurveyRecord& r, const DerivedMetrics& m,
                                   std::string_view key) {
  if (key == "year") return static_cast<double>(r.year);
  if (key == "tech_nm") return r.tech_node;
  if (key == "power_w") return r.power;
  if (key == "fs_hz") return r.sample_rate;
  if (key == "area_mm2") return r.area;
  if (key == "enob") return m.enob;
  if (key == "sndr_db") return m.sndr;
  if (key == "bandwidth_hz") return m.bandwidth;
  if (key == "nyquist_hz") return m.nyquist_rate;
  if (key == "ebit") return m.single_bit_energy;
  if (key == "density") return m.sampling_density;
  if (key == "fom_s") return m.schreier_fom;
  if (key == "speed_resolution") return m.speed_resolution;
  throw std::invalid_argument("unknown metric '" + std::string(key) + "'");
}

std::optional<double> metric_value(const SurveyRecord& record, std::string_view key, double osr) {
  return metric_value(record, derive_all(record, osr), key);
}

Eigen::ArrayXd metric_column(std::span<const SurveyRecord> records, std::string_view key, double osr) {
  require_metric_key(key);
  Eigen::ArrayXd column(static_cast<Eigen::Index>(records.size()));
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto v = metric_value(records[i], key, osr);
    column(static_cast<Eigen::Index>(i)) = v.value_or(std::numeric_limits<double>::quiet_NaN());
  }
  return column;
}

DisplayUnit display_unit(std::string_view key) {
  if (key == "fs_hz" || key == "bandwidth_hz" || key == "nyquist_hz") return {"GHz", 1e-9};
  if (key == "power_w") return {"mW", 1e3};
  if (key == "ebit") return {"pJ/bit", 1e12};
  if (key == "density") return {"GHz/mm2", 1e-9};
  if (key == "area_mm2") return {"mm2", 1.0};
  if (key == "tech_nm") return {"nm", 1.0};
  if (key == "enob") return {"bits", 1.0};
  if (key == "sndr_db" || key == "fom_s") return {"dB", 1.0};
  if (key == "speed_resolution") return {"Hz", 1.0};
  return {"", 1.0};
}

}  // namespace adcgap
