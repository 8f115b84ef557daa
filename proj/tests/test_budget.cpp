#include <doctest.h>

#include "adcgap/budget.hpp"
#include "adcgap/config.hpp"

using namespace adcgap;
using doctest::Approx;

TEST_CASE("default cascade") {
  const BudgetCascade b = cascade(PlatformSpec{}, AllocationPolicy{});
  CHECK(b.per_core_area == 4.5);
  CHECK(b.per_core_power == 2.1);
  CHECK(b.noc_area == 1.5);
  CHECK(b.noc_power == 0.7);
  CHECK(b.wireless_area == 0.75);
  CHECK(b.wireless_power == 0.35);
  CHECK(b.wireless_energy_per_bit == Approx(3.5e-12).epsilon(1e-15));
  CHECK(b.converter_area_target == Approx(0.075));
  CHECK(b.converter_power_target == Approx(0.035));
  CHECK(b.converter_energy_per_bit_target == Approx(0.35e-12));
  CHECK(energy_per_bit(b.wireless_power, 10e9) == Approx(35e-12).epsilon(1e-15));
}

TEST_CASE("cascade scales with the platform") {
  PlatformSpec p;
  p.core_count = 50;
  const BudgetCascade b = cascade(p, AllocationPolicy{});
  CHECK(b.per_core_area == 9.0);
  CHECK(b.wireless_power == Approx(0.7));
}

TEST_CASE("invalid inputs") {
  PlatformSpec p;
  p.core_count = 0;
  CHECK_THROWS_AS(cascade(p, AllocationPolicy{}), std::domain_error);
  AllocationPolicy a;
  a.compute_fraction = 0.5;
  CHECK_THROWS_AS(cascade(PlatformSpec{}, a), std::domain_error);
  a = {};
  a.wireless_share_of_noc = 1.5;
  CHECK_THROWS_AS(validate(a), std::domain_error);
  a = {};
  a.target_datarate = 0.0;
  CHECK_THROWS_AS(validate(a), std::domain_error);
  CHECK_THROWS(energy_per_bit(1.0, 0.0));
}

TEST_CASE("config overrides") {
  const Config c = Config::parse(
      "# platform\n"
      "platform.core_count = 200\n"
      "policy.noc_fraction = 1/4   # a quarter\n"
      "policy.compute_fraction = 3/8\n"
      "policy.memory_fraction = 3/8\n"
      "policy.target_datarate_bps = 50e9\n");
  const PlatformSpec p = platform_from_config(c);
  const AllocationPolicy a = policy_from_config(c);
  CHECK(p.core_count == 200);
  CHECK(p.chip_area == 450.0);
  CHECK(a.noc_fraction == 0.25);
  const BudgetCascade b = cascade(p, a);
  CHECK(b.per_core_area == 2.25);
  CHECK(b.wireless_energy_per_bit == Approx(1.05 * 0.25 * 0.5 / 50e9));
  CHECK_THROWS(platform_from_config(Config::parse("platform.core_count = 2.5\n")));
  CHECK_THROWS(Config::parse("no equals sign\n"));
  CHECK_THROWS(Config::parse("policy.noc_fraction = abc\n").get_number("policy.noc_fraction"));
}

TEST_CASE("bundled default config reproduces the defaults") {
  const Config c = Config::load(std::string(ADCGAP_DATA_DIR) + "/default.cfg");
  const BudgetCascade b = cascade(platform_from_config(c), policy_from_config(c));
  const BudgetCascade d = cascade(PlatformSpec{}, AllocationPolicy{});
  CHECK(b.wireless_area == d.wireless_area);
  CHECK(b.wireless_power == d.wireless_power);
  CHECK(b.wireless_energy_per_bit == d.wireless_energy_per_bit);
}

TEST_CASE("density comparison on the bundled sample") {
  const std::string dir = ADCGAP_DATA_DIR;
  const Dataset conv = parse_converter_csv(read_text_file(dir + "/sample_converters.csv")).dataset;
  const Dataset tx = parse_transceiver_csv(read_text_file(dir + "/sample_transceivers.csv")).dataset;
  const DensityComparison d = density_comparison(conv, tx);
  CHECK(d.converter_id == "xu17");
  CHECK(d.converter_density == Approx(8e11));
  CHECK(d.transceiver_id == "t1");
  CHECK(d.ratio == Approx(d.converter_density / d.transceiver_density));
  CHECK(d.ratio > 3.0);
  CHECK(d.ratio < 30.0);
  CHECK_THROWS_AS(density_comparison(Dataset{}, tx), std::invalid_argument);
  CHECK_THROWS_AS(density_comparison(conv, Dataset{}), std::invalid_argument);
}
