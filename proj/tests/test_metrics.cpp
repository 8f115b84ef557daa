#include <doctest.h>

#include <random>

#include "adcgap/derived.hpp"
#include "adcgap/metrics.hpp"
#include "oracle.hpp"

using namespace adcgap;
using doctest::Approx;

TEST_CASE("enob and sndr convert both ways") {
  CHECK(sndr_from_enob(4.0) == Approx(25.84));
  CHECK(enob_from_sndr(25.84) == Approx(4.0));
  CHECK(enob_from_sndr(sndr_from_enob(7.25)) == Approx(7.25).epsilon(1e-14));
  CHECK_THROWS_AS(sndr_from_enob(-1.0), std::domain_error);
  CHECK(enob_from_sndr(0.0) < 0.0);
}

TEST_CASE("bandwidth, energy and density of the Xu design") {
  CHECK(signal_bandwidth(24e9) == 12e9);
  CHECK(signal_bandwidth(24e9, 4.0) == 3e9);
  CHECK(nyquist_rate(24e9, 2.0) == 12e9);
  CHECK(single_bit_energy(0.023, 24e9) == Approx(1.9167e-12).epsilon(1e-4));
  CHECK(sampling_density(24e9, 0.03) == Approx(8e11));
  CHECK_THROWS_AS(signal_bandwidth(1e9, 0.5), std::domain_error);
  CHECK_THROWS_AS(single_bit_energy(0.0, 1e9), std::domain_error);
  CHECK_THROWS_AS(sampling_density(1e9, 0.0), std::domain_error);
}

TEST_CASE("schreier figure of merit") {
  CHECK(schreier_fom(50.0, 1e9, 1e-2) == Approx(156.99).epsilon(1e-5));
  CHECK(schreier_fom(60.0, 100e6, 1e-3) == Approx(166.9897).epsilon(1e-6));
}

TEST_CASE("jitter ceiling") {
  CHECK(jitter_snr_limit(10e9, 1e-13) == Approx(44.04).epsilon(1e-4));
  CHECK(jitter_enob_limit(10e9, 1e-13) == Approx(7.02).epsilon(1e-3));
  CHECK_THROWS(jitter_snr_limit(0.0, 1e-13));
  CHECK_THROWS(jitter_snr_limit(1e9, -1.0));
  // 10x in frequency costs 20 dB
  CHECK(jitter_snr_limit(1e9, 1e-12) - jitter_snr_limit(10e9, 1e-12) == Approx(20.0));
}

TEST_CASE("thermal energy floor") {
  const double floor4 = min_single_bit_energy(sndr_from_enob(4.0));
  CHECK(floor4 == Approx(2.54e-17).epsilon(5e-3));
  CHECK(min_energy_per_sample(25.84, 300.0) == Approx(1.271e-17).epsilon(1e-3));
  CHECK(min_energy_per_sample(sndr_from_enob(4.0)) * 2.0 == floor4);
  CHECK(min_energy_per_sample(10.0, 600.0) == Approx(2.0 * min_energy_per_sample(10.0, 300.0)));
  CHECK_THROWS(min_energy_per_sample(10.0, 0.0));
}

TEST_CASE("templated on the scalar") {
  const long double e = single_bit_energy<long double>(0.023L, 24e9L);
  CHECK(static_cast<double>(e) == Approx(1.9167e-12).epsilon(1e-4));
  const float j = jitter_snr_limit<float>(10e9f, 1e-13f);
  CHECK(j == Approx(44.04).epsilon(1e-3));
}

TEST_CASE("derive_all agrees with the oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    SurveyRecord r;
    r.id = "r" + std::to_string(i);
    r.year = 2000;
    r.power = std::pow(10.0, -5.0 + 5.0 * u(rng));
    r.sample_rate = std::pow(10.0, 3.0 + 8.0 * u(rng));
    r.enob = 1.0 + 15.0 * u(rng);
    r.area = std::pow(10.0, -3.0 + 3.0 * u(rng));
    const double osr = 1.0 + 63.0 * u(rng);
    const DerivedMetrics m = derive_all(r, osr);
    CHECK(oracle::rel_err(m.bandwidth, oracle::bandwidth(r.sample_rate, osr)) < 1e-12);
    CHECK(oracle::rel_err(m.single_bit_energy, oracle::ebit(r.power, r.sample_rate, osr)) < 1e-12);
    CHECK(oracle::rel_err(*m.sampling_density, oracle::density(r.sample_rate, osr, *r.area)) < 1e-12);
    CHECK(oracle::rel_err(*m.sndr, oracle::sndr(*r.enob)) < 1e-12);
    CHECK(oracle::rel_err(*m.schreier_fom, oracle::fom_s(oracle::sndr(*r.enob), r.sample_rate, r.power)) <
          1e-12);
    CHECK(oracle::rel_err(*m.speed_resolution, r.sample_rate * std::pow(2.0, *r.enob)) < 1e-12);
  }
}

TEST_CASE("missing inputs stay missing") {
  SurveyRecord r{.id = "kull", .year = 2014, .power = 0.667, .sample_rate = 90e9};
  const DerivedMetrics m = derive_all(r);
  CHECK_FALSE(m.enob);
  CHECK_FALSE(m.sndr);
  CHECK_FALSE(m.sampling_density);
  CHECK_FALSE(m.schreier_fom);
  CHECK(m.single_bit_energy == Approx(0.667 / 45e9));
  CHECK_FALSE(metric_value(r, "enob"));
  CHECK(std::isnan(metric_column(std::span(&r, 1), "density")(0)));
}

TEST_CASE("enob is derived from sndr") {
  SurveyRecord r{.id = "a", .year = 2010, .power = 1e-3, .sample_rate = 1e8, .sndr = 61.96};
  CHECK(*derive_all(r).enob == Approx(10.0));
  CHECK(*metric_value(r, "enob") == Approx(10.0));
}

TEST_CASE("metric keys") {
  CHECK(is_metric_key("ebit"));
  CHECK_FALSE(is_metric_key("speed"));
  CHECK_THROWS_AS(require_metric_key("speed"), std::invalid_argument);
  CHECK(preferred_direction("ebit") == Direction::minimize);
  CHECK(preferred_direction("area_mm2") == Direction::minimize);
  CHECK(preferred_direction("fs_hz") == Direction::maximize);
  CHECK(parse_direction("min") == Direction::minimize);
  CHECK(to_string(Direction::maximize) == "max");
  CHECK_THROWS(parse_direction("up"));
  CHECK(display_unit("ebit").scale == 1e12);
}
