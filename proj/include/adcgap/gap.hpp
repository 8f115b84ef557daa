#ifndef ADCGAP_GAP_HPP
#define ADCGAP_GAP_HPP

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adcgap/dataset.hpp"
#include "adcgap/derived.hpp"
#include "adcgap/trends.hpp"

namespace adcgap {

/// Converter-level requirement set. Thresholds are inclusive. A minimum of
/// 0 or a maximum of +inf disables the corresponding criterion.
struct RequirementSpec {
  std::string name;
  double min_bandwidth = 0.0;  // Hz
  double min_nyquist = 0.0;    // Hz, 2 * min_bandwidth
  double max_osr = 1.0;
  double min_enob = 0.0;
  double max_area = std::numeric_limits<double>::infinity();               // mm²
  double max_energy_per_bit = std::numeric_limits<double>::infinity();     // J/bit

  friend bool operator==(const RequirementSpec&, const RequirementSpec&) = default;
};

void validate(const RequirementSpec& spec);

struct Range {
  double low = 0.0;
  double high = 0.0;

  friend bool operator==(const Range&, const Range&) = default;
};

/// System-level scenario ranges for a wireless manycore.
struct ScenarioSpec {
  std::string name;
  Range transmission_range;  // m
  Range node_density;        // nodes/cm²
  Range network_throughput;  // bit/s
  Range latency;             // s
  Range bit_error_rate;
  Range transceiver_energy;  // J/bit
  Range transceiver_area;    // mm²

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

void validate(const ScenarioSpec& spec);

/// "table2-adc" (min ENOB 4) and "table2-adc-1bit" (min ENOB 1).
RequirementSpec requirement_preset(std::string_view name);
/// "table1-scenario".
ScenarioSpec scenario_preset(std::string_view name);
bool is_requirement_preset(std::string_view name);
bool is_scenario_preset(std::string_view name);

enum class Criterion { bandwidth, enob, area, energy };
inline constexpr std::array<Criterion, 4> kCriteria = {Criterion::bandwidth, Criterion::enob,
                                                       Criterion::area, Criterion::energy};
std::string_view to_string(Criterion criterion);
Criterion parse_criterion(std::string_view text);

/// Metric key measured by a criterion and the threshold it is held to.
std::string_view criterion_metric(Criterion criterion);
double criterion_threshold(const RequirementSpec& spec, Criterion criterion);

enum class Outcome { pass, fail, unknown };
std::string_view to_string(Outcome outcome);

struct CriterionResult {
  Outcome outcome = Outcome::unknown;
  std::optional<double> measured;
  /// measured/threshold for minimums, threshold/measured for maximums, so
  /// that >= 1 means pass. Absent when the measurement is missing.
  std::optional<double> margin;
};

struct RecordVerdict {
  std::string record_id;
  int year = 0;
  std::array<CriterionResult, 4> criteria;  // indexed like kCriteria

  const CriterionResult& operator[](Criterion c) const {
    return criteria[static_cast<std::size_t>(c)];
  }
  bool overall_pass() const;
  int non_passing() const;
  std::optional<double> worst_margin() const;
};

RecordVerdict evaluate_record(const SurveyRecord& record, const DerivedMetrics& metrics,
                              const RequirementSpec& spec);

struct CriterionSummary {
  int pass = 0;
  int fail = 0;
  int unknown = 0;
  std::optional<std::string> best_id;  // largest margin, ties to the smallest id
  std::optional<double> best_margin;
  std::optional<double> best_measured;
  int best_year = 0;
};

struct Projection {
  enum class Status { already_met, projected, unreachable, no_trend };
  Criterion criterion = Criterion::energy;
  Status status = Status::no_trend;
  std::optional<double> year;
  TimePoint anchor;
  double threshold = 0.0;
};
std::string_view to_string(Projection::Status status);

struct GapReport {
  RequirementSpec spec;
  double osr = 1.0;
  int record_count = 0;
  std::array<CriterionSummary, 4> criteria;
  int overall_pass = 0;
  std::optional<std::string> nearest_miss_id;
  std::vector<RecordVerdict> verdicts;  // dataset order

  const CriterionSummary& operator[](Criterion c) const {
    return criteria[static_cast<std::size_t>(c)];
  }
  const RecordVerdict* verdict(std::string_view id) const;
};

/// Throws std::invalid_argument on an empty dataset and std::domain_error
/// when `osr` exceeds the spec's oversampling allowance.
GapReport gap_report(const Dataset& dataset, const RequirementSpec& spec, double osr = 1.0);

struct FeasibilityAssessment {
  std::vector<Projection> projections;
  /// Latest projected year; absent when any failing criterion is unreachable
  /// or lacks a trend.
  std::optional<double> overall_year;
};

/// Projects the year each criterion is met. Criteria that some record
/// already passes project to their anchor year. Anchors default to the best
/// design per criterion in the report.
FeasibilityAssessment feasibility_assessment(const GapReport& report,
                                             const std::map<Criterion, TrendFit>& fits,
                                             const std::map<Criterion, TimePoint>& anchors = {});

// ---------------------------------------------------------------------------
// Transceiver screening against a scenario.

enum class TransceiverCriterion { throughput, energy, area };

struct TransceiverVerdict {
  std::string record_id;
  std::array<CriterionResult, 3> criteria;
  bool overall_pass() const;
};

/// Throughput must reach the scenario's lower bound; energy per bit and area
/// must stay within the upper bounds.
TransceiverVerdict evaluate_transceiver(const TransceiverRecord& record, const ScenarioSpec& spec);

}  // namespace adcgap

#endif  // ADCGAP_GAP_HPP
