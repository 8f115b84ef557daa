#ifndef ADCGAP_BUDGET_HPP
#define ADCGAP_BUDGET_HPP

#include <string>

#include "adcgap/dataset.hpp"

namespace adcgap {

struct PlatformSpec {
  double chip_area = 450.0;  // mm²
  double tdp = 210.0;        // W
  int core_count = 100;
};

/// Fractions of the per-core budget. The defaults give each core
/// sub-system an equal third, half of the NoC to the wireless part and a
/// tenth of the transceiver to data conversion.
struct AllocationPolicy {
  double compute_fraction = 1.0 / 3.0;
  double memory_fraction = 1.0 / 3.0;
  double noc_fraction = 1.0 / 3.0;
  double wireless_share_of_noc = 0.5;
  double conversion_share_of_wireless = 0.1;
  double target_datarate = 100e9;  // bit/s
};

void validate(const PlatformSpec& platform);
void validate(const AllocationPolicy& policy);

struct BudgetCascade {
  double per_core_area = 0.0;
  double per_core_power = 0.0;
  double noc_area = 0.0;
  double noc_power = 0.0;
  double wireless_area = 0.0;
  double wireless_power = 0.0;
  double wireless_energy_per_bit = 0.0;
  double converter_area_target = 0.0;
  double converter_power_target = 0.0;
  double converter_energy_per_bit_target = 0.0;
};

/// Throws std::domain_error when either input violates its invariants.
BudgetCascade cascade(const PlatformSpec& platform, const AllocationPolicy& policy);

double energy_per_bit(double power, double datarate);
double transceiver_energy_per_bit(const TransceiverRecord& record);

struct DensityComparison {
  double ratio = 0.0;
  double converter_density = 0.0;    // Hz/mm²
  double transceiver_density = 0.0;  // (bit/s)/mm²
  std::string converter_id;
  std::string transceiver_id;
};

/// Best converter sampling density over best transceiver bitrate density.
/// Converter records without area are skipped; throws std::invalid_argument
/// when either side has nothing to compare.
DensityComparison density_comparison(const Dataset& converters, const Dataset& transceivers,
                                     double osr = 1.0);

}  // namespace adcgap

#endif  // ADCGAP_BUDGET_HPP
