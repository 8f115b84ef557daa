#include "adcgap/config.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace adcgap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double plain_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("'" + std::string(s) + "' is not a number");
  return value;
}

}  // namespace

double parse_number(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return plain_number(text);
  const double num = plain_number(text.substr(0, slash));
  const double den = plain_number(text.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("'" + std::string(text) + "' divides by zero");
  return num / den;
}

std::string format_exact(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Config Config::parse(std::string_view text) {
  Config config;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
    config.entries_[std::string(key)] = std::string(value);
  }
  return config;
}

Config Config::load(const std::string& path) { return parse(read_text_file(path)); }

bool Config::contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

std::optional<std::string> Config::get(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> Config::get_number(std::string_view key) const {
  const auto value = get(key);
  if (!value) return std::nullopt;
  try {
    return parse_number(*value);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("config key '" + std::string(key) + "': " + e.what());
  }
}

void Config::set(std::string key, std::string value) { entries_[std::move(key)] = std::move(value); }

bool Config::has_section(std::string_view section) const {
  for (const auto& [key, value] : entries_)
    if (key.size() > section.size() && key.starts_with(section) && key[section.size()] == '.') return true;
  return false;
}

std::string Config::to_string() const {
  std::string out;
  for (const auto& [key, value] : entries_) out += key + " = " + value + "\n";
  return out;
}

PlatformSpec platform_from_config(const Config& c, PlatformSpec p) {
  if (auto v = c.get_number("platform.chip_area_mm2")) p.chip_area = *v;
  if (auto v = c.get_number("platform.tdp_w")) p.tdp = *v;
  if (auto v = c.get_number("platform.core_count")) {
    if (*v != std::floor(*v) || *v < 1.0 || *v > 1e9)
      throw std::invalid_argument("platform.core_count must be a positive integer");
    p.core_count = static_cast<int>(*v);
  }
  validate(p);
  return p;
}

AllocationPolicy policy_from_config(const Config& c, AllocationPolicy a) {
  if (auto v = c.get_number("policy.compute_fraction")) a.compute_fraction = *v;
  if (auto v = c.get_number("policy.memory_fraction")) a.memory_fraction = *v;
  if (auto v = c.get_number("policy.noc_fraction")) a.noc_fraction = *v;
  if (auto v = c.get_number("policy.wireless_share")) a.wireless_share_of_noc = *v;
  if (auto v = c.get_number("policy.conversion_share")) a.conversion_share_of_wireless = *v;
  if (auto v = c.get_number("policy.target_datarate_bps")) a.target_datarate = *v;
  validate(a);
  return a;
}

RequirementSpec requirement_from_config(const Config& c, RequirementSpec s) {
  if (auto v = c.get("requirement.name")) s.name = *v;
  if (auto v = c.get_number("requirement.min_bandwidth_hz")) {
    s.min_bandwidth = *v;
    if (!c.contains("requirement.min_nyquist_hz")) s.min_nyquist = 2.0 * *v;
  }
  if (auto v = c.get_number("requirement.min_nyquist_hz")) s.min_nyquist = *v;
  if (auto v = c.get_number("requirement.max_osr")) s.max_osr = *v;
  if (auto v = c.get_number("requirement.min_enob")) s.min_enob = *v;
  if (auto v = c.get_number("requirement.max_area_mm2")) s.max_area = *v;
  if (auto v = c.get_number("requirement.max_energy_per_bit_j")) s.max_energy_per_bit = *v;
  validate(s);
  return s;
}

Config requirement_to_config(const RequirementSpec& s) {
  Config c;
  c.set("requirement.name", s.name);
  c.set("requirement.min_bandwidth_hz", format_exact(s.min_bandwidth));
  c.set("requirement.min_nyquist_hz", format_exact(s.min_nyquist));
  c.set("requirement.max_osr", format_exact(s.max_osr));
  c.set("requirement.min_enob", format_exact(s.min_enob));
  c.set("requirement.max_area_mm2", format_exact(s.max_area));
  c.set("requirement.max_energy_per_bit_j", format_exact(s.max_energy_per_bit));
  return c;
}

}  // namespace adcgap
