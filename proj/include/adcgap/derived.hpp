#ifndef ADCGAP_DERIVED_HPP
#define ADCGAP_DERIVED_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "adcgap/dataset.hpp"

namespace adcgap {

/// Per-record derived quantities. Fields whose inputs are missing stay
/// absent; nothing is imputed.
struct DerivedMetrics {
  std::optional<double> enob;
  std::optional<double> sndr;
  double osr = 1.0;
  double bandwidth = 0.0;          // Hz
  double nyquist_rate = 0.0;       // Hz
  double single_bit_energy = 0.0;  // J/bit
  std::optional<double> sampling_density;  // Hz/mm²
  std::optional<double> schreier_fom;      // dB
  std::optional<double> speed_resolution;  // f_s * 2^ENOB
  std::vector<std::string> warnings;

  friend bool operator==(const DerivedMetrics&, const DerivedMetrics&) = default;
};

DerivedMetrics derive_all(const SurveyRecord& record, double osr = 1.0);

// ---------------------------------------------------------------------------
// Metric keys shared by frontier, trends, gap and report.
//
//   record fields:  year tech_nm power_w fs_hz area_mm2
//   resolution:     enob sndr_db (derived from each other when one is absent)
//   derived:        bandwidth_hz nyquist_hz ebit density fom_s speed_resolution

enum class Direction { maximize, minimize };

std::string_view to_string(Direction direction);
Direction parse_direction(std::string_view text);

const std::vector<std::string>& metric_keys();
bool is_metric_key(std::string_view key);

/// Throws std::invalid_argument naming the key if it is unknown.
void require_metric_key(std::string_view key);

/// The direction in which a metric improves (ebit and area shrink, the rest grow).
Direction preferred_direction(std::string_view key);

std::optional<double> metric_value(const SurveyRecord& record, const DerivedMetrics& metrics,
                                   std::string_view key);
std::optional<double> metric_value(const SurveyRecord& record, std::string_view key,
                                   double osr = 1.0);

/// Column of `key` over every record, NaN where the value is absent.
Eigen::ArrayXd metric_column(std::span<const SurveyRecord> records, std::string_view key,
                             double osr = 1.0);

/// Display unit and scale factor used by text and plot output.
struct DisplayUnit {
  std::string_view label;
  double scale = 1.0;  // display = value * scale
};
DisplayUnit display_unit(std::string_view key);

}  // namespace adcgap

#endif  // ADCGAP_DERIVED_HPP
