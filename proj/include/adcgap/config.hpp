#ifndef ADCGAP_CONFIG_HPP
#define ADCGAP_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "adcgap/budget.hpp"
#include "adcgap/gap.hpp"

namespace adcgap {

/// Flat `section.key = value` configuration. `#` starts a comment, blank
/// lines are ignored, numeric values may be written as a ratio `1/3`.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  bool contains(std::string_view key) const;
  std::optional<std::string> get(std::string_view key) const;
  std::optional<double> get_number(std::string_view key) const;
  void set(std::string key, std::string value);

  bool has_section(std::string_view section) const;
  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }

  std::string to_string() const;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

/// Reads a number written as decimal/scientific or `a/b`. Throws
/// std::invalid_argument on anything else.
double parse_number(std::string_view text);

/// Formats with 17 significant digits so the value survives a round trip.
std::string format_exact(double value);

PlatformSpec platform_from_config(const Config& config, PlatformSpec defaults = {});
AllocationPolicy policy_from_config(const Config& config, AllocationPolicy defaults = {});

/// Keys under `requirement.`: name, min_bandwidth_hz, min_nyquist_hz,
/// max_osr, min_enob, max_area_mm2, max_energy_per_bit_j.
RequirementSpec requirement_from_config(const Config& config, RequirementSpec defaults = {});
Config requirement_to_config(const RequirementSpec& spec);

}  // namespace adcgap

#endif  // ADCGAP_CONFIG_HPP
