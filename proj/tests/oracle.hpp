// Direct evaluations used as references by the tests. Written from the
// definitions, without calling into the library.
#ifndef ADCGAP_TESTS_ORACLE_HPP
#define ADCGAP_TESTS_ORACLE_HPP

#include <cmath>
#include <string>
#include <vector>

namespace oracle {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBoltzmann = 1.380649e-23;

inline double sndr(double enob) { return 6.02 * enob + 1.76; }
inline double enob(double sndr) { return (sndr - 1.76) / 6.02; }
inline double bandwidth(double fs, double osr) { return fs / 2.0 / osr; }
inline double ebit(double p, double fs, double osr) { return p * 2.0 * osr / fs; }
inline double density(double fs, double osr, double area) { return fs / osr / area; }
inline double fom_s(double sndr_db, double fs, double p) {
  return sndr_db + 10.0 * std::log10(fs / 2.0 / p);
}
inline double jitter_snr(double f, double sigma) { return -20.0 * std::log10(2.0 * kPi * f * sigma); }
inline double min_ebit(double sndr_db, double t = 300.0) {
  return 2.0 * 8.0 * kBoltzmann * t * std::pow(10.0, sndr_db / 10.0);
}

inline double rel_err(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

/// O(n^2) dominance filter; rows are points, larger is better in every column.
inline std::vector<int> brute_force_front(const std::vector<std::vector<double>>& pts) {
  std::vector<int> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
      if (i == j) continue;
      bool all_ge = true, any_gt = false;
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        if (pts[j][k] < pts[i][k]) all_ge = false;
        if (pts[j][k] > pts[i][k]) any_gt = true;
      }
      dominated = all_ge && any_gt;
    }
    if (!dominated) out.push_back(static_cast<int>(i));
  }
  return out;
}

/// Years for an exponential trend with the given doubling (or halving, if
/// negative) period to carry `from` to `to`.
inline double years_between(double from, double to, double signed_period) {
  return std::log2(to / from) * signed_period;
}

}  // namespace oracle

#endif
