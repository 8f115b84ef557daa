#ifndef ADCGAP_DATASET_HPP
#define ADCGAP_DATASET_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adcgap {

/// Raised when a document cannot be ingested at all (no header, missing
/// schema columns, unreadable input). Row-level problems are reported as
/// ParseIssue values instead.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Architecture { sar, flash, pipeline, time_interleaved, other };

std::string_view to_string(Architecture arch);
std::optional<Architecture> parse_architecture(std::string_view text);

/// One published converter design. Units: W, Hz, dB, bits, mm², nm.
struct SurveyRecord {
  std::string id;
  int year = 0;
  std::optional<std::string> venue;
  std::optional<Architecture> architecture;
  std::optional<double> tech_node;
  double power = 0.0;
  double sample_rate = 0.0;
  std::optional<double> sndr;
  std::optional<double> enob;
  std::optional<double> area;
  std::optional<std::string> notes;

  bool resolution_complete() const { return sndr.has_value() || enob.has_value(); }

  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct TransceiverRecord {
  std::string id;
  int year = 0;
  double bitrate = 0.0;  // bit/s
  double power = 0.0;    // W
  double area = 0.0;     // mm², antenna excluded

  friend bool operator==(const TransceiverRecord&, const TransceiverRecord&) = default;
};

struct Provenance {
  std::string source;
  std::string parsed_at;  // ISO-8601 UTC
};

/// Immutable collection of survey records. Ids are unique within each
/// collection; construction throws DataError otherwise.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<SurveyRecord> records, std::vector<TransceiverRecord> transceivers,
          Provenance provenance = {});

  std::span<const SurveyRecord> records() const { return records_; }
  std::span<const TransceiverRecord> transceivers() const { return transceivers_; }
  const Provenance& provenance() const { return provenance_; }

  const SurveyRecord* find(std::string_view id) const;
  bool empty() const { return records_.empty() && transceivers_.empty(); }

 private:
  std::vector<SurveyRecord> records_;
  std::vector<TransceiverRecord> transceivers_;
  Provenance provenance_;
};

enum class Severity { warning, fatal };

struct ParseIssue {
  int row = 0;  // 1-based line number; the header is row 1
  std::string column;
  Severity severity = Severity::warning;
  std::string message;
};

struct ParseResult {
  Dataset dataset;
  std::vector<ParseIssue> issues;

  bool has_fatal() const;
};

inline constexpr std::string_view kConverterColumns[] = {
    "id", "year", "venue", "architecture", "tech_nm", "power_w",
    "fs_hz", "sndr_db", "enob", "area_mm2", "notes"};
inline constexpr std::string_view kTransceiverColumns[] = {
    "id", "year", "bitrate_bps", "power_w", "area_mm2"};

ParseResult parse_converter_csv(std::string_view text, std::string source = "<memory>");
ParseResult parse_transceiver_csv(std::string_view text, std::string source = "<memory>");

std::string read_text_file(const std::string& path);

/// Serializes back to the ingestion schema. Numbers use 17 significant
/// digits so that re-parsing reproduces them bit for bit.
std::string to_converter_csv(std::span<const SurveyRecord> records);
std::string to_transceiver_csv(std::span<const TransceiverRecord> records);

// ---------------------------------------------------------------------------
// Filtering

enum class Comparison { lt, le, gt, ge, eq, ne };

/// A single field condition. Numeric fields compare against `number`;
/// `architecture` compares (eq/ne only) against `text`.
struct Condition {
  std::string field;
  Comparison op = Comparison::eq;
  double number = 0.0;
  std::string text;
};

/// Conjunction of conditions, optionally negated. A record whose field is
/// absent does not satisfy a condition on it, so `negated()` always selects
/// the exact complement.
struct Predicate {
  std::vector<Condition> conditions;
  bool negate = false;

  Predicate negated() const { return {conditions, !negate}; }
  bool matches(const SurveyRecord& record) const;
  std::string describe() const;
};

/// Fields accepted in conditions: year, tech_nm, power_w, fs_hz, sndr_db,
/// enob, area_mm2, architecture. `enob`/`sndr_db` fall back to the value
/// implied by the other column when only one is present.
bool is_filter_field(std::string_view field);

/// Parses "enob<=4", "year>=2014", "architecture==SAR".
Condition parse_condition(std::string_view text);

Dataset filter_records(const Dataset& dataset, const Predicate& predicate);

}  // namespace adcgap

#endif  // ADCGAP_DATASET_HPP
