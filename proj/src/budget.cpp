#include "adcgap/budget.hpp"

#include <cmath>
#include <stdexcept>

#include "adcgap/derived.hpp"

namespace adcgap {

namespace {
void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}
bool is_fraction(double f) { return f >= 0.0 && f <= 1.0; }
}  // namespace

void validate(const PlatformSpec& p) {
  require(p.chip_area > 0.0 && std::isfinite(p.chip_area), "chip area must be positive");
  require(p.tdp > 0.0 && std::isfinite(p.tdp), "TDP must be positive");
  require(p.core_count >= 1, "core count must be at least 1");
}

void validate(const AllocationPolicy& a) {
  require(is_fraction(a.compute_fraction) && is_fraction(a.memory_fraction) &&
              is_fraction(a.noc_fraction),
          "sub-system fractions must lie in [0, 1]");
  // tolerates rounding in decimal thirds
  require(a.compute_fraction + a.memory_fraction + a.noc_fraction <= 1.0 + 1e-12,
          "sub-system fractions must sum to at most 1");
  require(is_fraction(a.wireless_share_of_noc), "wireless share must lie in [0, 1]");
  require(is_fraction(a.conversion_share_of_wireless), "conversion share must lie in [0, 1]");
  require(a.target_datarate > 0.0 && std::isfinite(a.target_datarate),
          "target datarate must be positive");
}

BudgetCascade cascade(const PlatformSpec& platform, const AllocationPolicy& policy) {
  validate(platform);
  validate(policy);
  const double cores = static_cast<double>(platform.core_count);

  BudgetCascade b;
  b.per_core_area = platform.chip_area / cores;
  b.per_core_power = platform.tdp / cores;
  b.noc_area = b.per_core_area * policy.noc_fraction;
  b.noc_power = b.per_core_power * policy.noc_fraction;
  b.wireless_area = b.noc_area * policy.wireless_share_of_noc;
  b.wireless_power = b.noc_power * policy.wireless_share_of_noc;
  b.wireless_energy_per_bit = b.wireless_power / policy.target_datarate;
  b.converter_area_target = b.wireless_area * policy.conversion_share_of_wireless;
  b.converter_power_target = b.wireless_power * policy.conversion_share_of_wireless;
  b.converter_energy_per_bit_target = b.converter_power_target / policy.target_datarate;
  return b;
}

double energy_per_bit(double power, double datarate) {
  require(power > 0.0, "power must be positive");
  require(datarate > 0.0, "datarate must be positive");
  return power / datarate;
}

double transceiver_energy_per_bit(const TransceiverRecord& record) {
  return energy_per_bit(record.power, record.bitrate);
}

DensityComparison density_comparison(const Dataset& converters, const Dataset& transceivers,
                                     double osr) {
  DensityComparison out;
  bool have_converter = false;
  for (const auto& r : converters.records()) {
    const auto density = metric_value(r, "density", osr);
    if (!density) continue;
    if (!have_converter || *density > out.converter_density ||
        (*density == out.converter_density && r.id < out.converter_id)) {
      out.converter_density = *density;
      out.converter_id = r.id;
      have_converter = true;
    }
  }
  if (!have_converter)
    throw std::invalid_argument("density comparison: no converter record with an area");

  bool have_transceiver = false;
  for (const auto& t : transceivers.transceivers()) {
    const double density = t.bitrate / t.area;
    if (!have_transceiver || density > out.transceiver_density ||
        (density == out.transceiver_density && t.id < out.transceiver_id)) {
      out.transceiver_density = density;
      out.transceiver_id = t.id;
      have_transceiver = true;
    }
  }
  if (!have_transceiver) throw std::invalid_argument("density comparison: no transceiver records");

  out.ratio = out.converter_density / out.transceiver_density;
  return out;
}

}  // namespace adcgap
