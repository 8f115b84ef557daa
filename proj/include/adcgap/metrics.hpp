#ifndef ADCGAP_METRICS_HPP
#define ADCGAP_METRICS_HPP

// Closed-form converter metrics. Every function is templated on the scalar
// type so it can be used with double, long double or autodiff scalars.

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adcgap {

struct PhysicalConstants {
  static constexpr double boltzmann = 1.380649e-23;  // J/K
  static constexpr double default_temperature = 300.0;  // K
};

namespace detail {
inline void require(bool condition, const char* message) {
  if (!condition) throw std::domain_error(message);
}
}  // namespace detail

template <typename Scalar>
Scalar sndr_from_enob(Scalar enob) {
  detail::require(enob >= Scalar(0), "enob must be non-negative");
  return Scalar(6.02) * enob + Scalar(1.76);
}

/// May return a negative value for sub-noise inputs; callers decide.
template <typename Scalar>
Scalar enob_from_sndr(Scalar sndr) {
  return (sndr - Scalar(1.76)) / Scalar(6.02);
}

/// BW = f_s / (2 OSR).
template <typename Scalar>
Scalar signal_bandwidth(Scalar sample_rate, Scalar osr = Scalar(1)) {
  detail::require(sample_rate > Scalar(0), "sample rate must be positive");
  detail::require(osr >= Scalar(1), "oversampling ratio must be >= 1");
  return sample_rate / (Scalar(2) * osr);
}

/// Nyquist-equivalent rate f_s / OSR.
template <typename Scalar>
Scalar nyquist_rate(Scalar sample_rate, Scalar osr = Scalar(1)) {
  detail::require(sample_rate > Scalar(0), "sample rate must be positive");
  detail::require(osr >= Scalar(1), "oversampling ratio must be >= 1");
  return sample_rate / osr;
}

/// Energy per modulated bit at 1 b/s/Hz: P / BW, in J/bit.
template <typename Scalar>
Scalar single_bit_energy(Scalar power, Scalar sample_rate, Scalar osr = Scalar(1)) {
  detail::require(power > Scalar(0), "power must be positive");
  return power / signal_bandwidth(sample_rate, osr);
}

/// Nyquist rate per unit area, Hz/mm².
template <typename Scalar>
Scalar sampling_density(Scalar nyquist, Scalar area) {
  detail::require(area > Scalar(0), "area must be positive");
  detail::require(nyquist > Scalar(0), "nyquist rate must be positive");
  return nyquist / area;
}

/// Schreier figure of merit, dB.
template <typename Scalar>
Scalar schreier_fom(Scalar sndr, Scalar sample_rate, Scalar power) {
  detail::require(sample_rate > Scalar(0), "sample rate must be positive");
  detail::require(power > Scalar(0), "power must be positive");
  using std::log10;
  return sndr + Scalar(10) * log10(sample_rate / (Scalar(2) * power));
}

/// Aperture-jitter SNR ceiling, dB: -20 log10(2 pi f sigma).
template <typename Scalar>
Scalar jitter_snr_limit(Scalar input_frequency, Scalar jitter_rms) {
  detail::require(input_frequency > Scalar(0), "input frequency must be positive");
  detail::require(jitter_rms > Scalar(0), "jitter must be positive");
  using std::log10;
  return Scalar(-20) * log10(Scalar(2) * std::numbers::pi_v<Scalar> * input_frequency * jitter_rms);
}

template <typename Scalar>
Scalar jitter_enob_limit(Scalar input_frequency, Scalar jitter_rms) {
  return enob_from_sndr(jitter_snr_limit(input_frequency, jitter_rms));
}

/// Class-B sampling-capacitor floor (P/f_s)_min = 8 k T SNR, with SNR taken
/// as the linear power ratio 10^(SNDR/10). Joules per sample.
template <typename Scalar>
Scalar min_energy_per_sample(Scalar sndr,
                             Scalar temperature = Scalar(PhysicalConstants::default_temperature)) {
  detail::require(temperature > Scalar(0), "temperature must be positive");
  using std::pow;
  return Scalar(8) * Scalar(PhysicalConstants::boltzmann) * temperature *
         pow(Scalar(10), sndr / Scalar(10));
}

/// The same floor expressed per modulated bit at Nyquist rate (E_bit = 2 P / f_s).
template <typename Scalar>
Scalar min_single_bit_energy(Scalar sndr,
                             Scalar temperature = Scalar(PhysicalConstants::default_temperature)) {
  return Scalar(2) * min_energy_per_sample(sndr, temperature);
}

}  // namespace adcgap

#endif  // ADCGAP_METRICS_HPP
