#include "adcgap/dataset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "adcgap/metrics.hpp"
#include "csv.hpp"

namespace adcgap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<int> to_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Header name -> cell index, with schema checks shared by both parsers.
class Columns {
 public:
  Columns(const csv::Row& header, std::span<const std::string_view> schema,
          std::vector<ParseIssue>& issues) {
    for (std::size_t i = 0; i < header.cells.size(); ++i) {
      const std::string name = lower(trim(header.cells[i]));
      if (name.empty()) throw DataError("header cell " + std::to_string(i + 1) + " is empty");
      if (!index_.emplace(name, i).second) throw DataError("duplicate header column '" + name + "'");
      if (std::find(schema.begin(), schema.end(), name) == schema.end())
        issues.push_back({header.line, name, Severity::warning, "unknown column ignored"});
    }
    for (std::string_view col : schema) {
      if (!index_.contains(std::string(col)))
        throw DataError("header is missing required column '" + std::string(col) + "'");
    }
    width_ = header.cells.size();
  }

  std::string_view cell(const csv::Row& row, std::string_view name) const {
    return trim(row.cells[index_.at(std::string(name))]);
  }
  std::size_t width() const { return width_; }

 private:
  std::map<std::string, std::size_t> index_;
  std::size_t width_ = 0;
};

/// Collects per-cell problems for one row.
struct RowReader {
  const Columns& columns;
  const csv::Row& row;
  std::vector<ParseIssue>& issues;
  bool fatal = false;

  void fail(std::string_view column, std::string message) {
    issues.push_back({row.line, std::string(column), Severity::fatal, std::move(message)});
    fatal = true;
  }

  std::optional<std::string> text(std::string_view column) const {
    const auto cell = columns.cell(row, column);
    if (cell.empty()) return std::nullopt;
    return std::string(cell);
  }

  std::optional<double> number(std::string_view column, bool required) {
    const auto cell = columns.cell(row, column);
    if (cell.empty()) {
      if (required) fail(column, std::string(column) + " is required");
      return std::nullopt;
    }
    auto value = to_double(cell);
    if (!value) fail(column, "'" + std::string(cell) + "' is not a finite number");
    return value;
  }

  std::optional<double> positive(std::string_view column, std::string_view label, bool required) {
    auto value = number(column, required);
    if (value && *value <= 0.0) {
      fail(column, std::string(label) + " must be positive");
      return std::nullopt;
    }
    return value;
  }

  std::optional<int> year() {
    const auto cell = columns.cell(row, "year");
    const auto value = to_int(cell);
    if (!value) {
      fail("year", cell.empty() ? "year is required" : "'" + std::string(cell) + "' is not an integer year");
      return std::nullopt;
    }
    if (*value < 1970 || *value > 2100) {
      fail("year", "year must lie in [1970, 2100]");
      return std::nullopt;
    }
    return value;
  }
};

template <typename Record, typename Build>
ParseResult parse_document(std::string_view text, std::string source,
                           std::span<const std::string_view> schema, Build build) {
  std::vector<csv::Row> rows;
  try {
    rows = csv::read(text);
  } catch (const std::runtime_error& e) {
    throw DataError(std::string("unreadable CSV: ") + e.what());
  }
  if (rows.empty()) throw DataError("document has no header row");

  ParseResult result;
  const Columns columns(rows.front(), schema, result.issues);

  std::vector<Record> records;
  std::set<std::string, std::less<>> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (row.cells.size() != columns.width()) {
      result.issues.push_back({row.line, "", Severity::fatal,
                               "expected " + std::to_string(columns.width()) + " cells, found " +
                                   std::to_string(row.cells.size())});
      continue;
    }
    RowReader reader{columns, row, result.issues};
    std::optional<Record> record = build(reader);
    if (reader.fatal || !record) continue;
    if (!seen.insert(record->id).second) {
      result.issues.push_back({row.line, "id", Severity::fatal, "duplicate id '" + record->id + "'"});
      continue;
    }
    records.push_back(std::move(*record));
  }

  Provenance provenance{std::move(source), utc_now()};
  if constexpr (std::is_same_v<Record, SurveyRecord>) {
    result.dataset = Dataset(std::move(records), {}, std::move(provenance));
  } else {
    result.dataset = Dataset({}, std::move(records), std::move(provenance));
  }
  return result;
}

std::string_view comparison_symbol(Comparison op) {
  switch (op) {
    case Comparison::lt: return "<";
    case Comparison::le: return "<=";
    case Comparison::gt: return ">";
    case Comparison::ge: return ">=";
    case Comparison::eq: return "==";
    case Comparison::ne: return "!=";
  }
  return "?";
}

template <typename T>
bool compare(const T& lhs, Comparison op, const T& rhs) {
  switch (op) {
    case Comparison::lt: return lhs < rhs;
    case Comparison::le: return lhs <= rhs;
    case Comparison::gt: return lhs > rhs;
    case Comparison::ge: return lhs >= rhs;
    case Comparison::eq: return lhs == rhs;
    case Comparison::ne: return lhs != rhs;
  }
  return false;
}

std::optional<double> record_field(const SurveyRecord& r, std::string_view field) {
  if (field == "year") return static_cast<double>(r.year);
  if (field == "tech_nm") return r.tech_node;
  if (field == "power_w") return r.power;
  if (field == "fs_hz") return r.sample_rate;
  if (field == "area_mm2") return r.area;
  if (field == "enob") {
    if (r.enob) return r.enob;
    if (r.sndr) return enob_from_sndr(*r.sndr);
    return std::nullopt;
  }
  if (field == "sndr_db") {
    if (r.sndr) return r.sndr;
    if (r.enob && *r.enob >= 0.0) return sndr_from_enob(*r.enob);
    return std::nullopt;
  }
  return std::nullopt;
}

bool condition_holds(const SurveyRecord& r, const Condition& c) {
  if (c.field == "architecture") {
    if (!r.architecture) return false;
    const auto wanted = parse_architecture(c.text);
    return wanted && compare(*r.architecture, c.op, *wanted);
  }
  const auto value = record_field(r, c.field);
  return value && compare(*value, c.op, c.number);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Architecture arch) {
  switch (arch) {
    case Architecture::sar: return "SAR";
    case Architecture::flash: return "flash";
    case Architecture::pipeline: return "pipeline";
    case Architecture::time_interleaved: return "time-interleaved";
    case Architecture::other: return "other";
  }
  return "other";
}

std::optional<Architecture> parse_architecture(std::string_view text) {
  const std::string key = lower(trim(text));
  if (key == "sar") return Architecture::sar;
  if (key == "flash") return Architecture::flash;
  if (key == "pipeline") return Architecture::pipeline;
  if (key == "time-interleaved" || key == "ti") return Architecture::time_interleaved;
  if (key == "other") return Architecture::other;
  return std::nullopt;
}

Dataset::Dataset(std::vector<SurveyRecord> records, std::vector<TransceiverRecord> transceivers,
                 Provenance provenance)
    : records_(std::move(records)),
      transceivers_(std::move(transceivers)),
      provenance_(std::move(provenance)) {
  std::set<std::string_view> ids;
  for (const auto& r : records_)
    if (!ids.insert(r.id).second) throw DataError("duplicate converter id '" + r.id + "'");
  ids.clear();
  for (const auto& t : transceivers_)
    if (!ids.insert(t.id).second) throw DataError("duplicate transceiver id '" + t.id + "'");
}

const SurveyRecord* Dataset::find(std::string_view id) const {
  const auto it = std::find_if(records_.begin(), records_.end(),
                               [&](const SurveyRecord& r) { return r.id == id; });
  return it == records_.end() ? nullptr : &*it;
}

bool ParseResult::has_fatal() const {
  return std::any_of(issues.begin(), issues.end(),
                     [](const ParseIssue& i) { return i.severity == Severity::fatal; });
}

ParseResult parse_converter_csv(std::string_view text, std::string source) {
  return parse_document<SurveyRecord>(
      text, std::move(source), kConverterColumns,
      [](RowReader& in) -> std::optional<SurveyRecord> {
        SurveyRecord r;
        if (auto id = in.text("id")) {
          r.id = *id;
        } else {
          in.fail("id", "id is required");
        }
        if (auto year = in.year()) r.year = *year;
        r.venue = in.text("venue");
        if (auto arch = in.text("architecture")) {
          r.architecture = parse_architecture(*arch);
          if (!r.architecture)
            in.issues.push_back({in.row.line, "architecture", Severity::warning,
                                 "unrecognized architecture '" + *arch + "' left unset"});
        }
        r.tech_node = in.positive("tech_nm", "tech_nm", false);
        if (auto p = in.positive("power_w", "power", true)) r.power = *p;
        if (auto fs = in.positive("fs_hz", "sample rate", true)) r.sample_rate = *fs;
        r.sndr = in.number("sndr_db", false);
        r.enob = in.number("enob", false);
        if (r.enob && *r.enob < 0.0) {
          in.fail("enob", "enob must be non-negative");
          r.enob.reset();
        }
        r.area = in.positive("area_mm2", "area", false);
        r.notes = in.text("notes");
        if (!in.fatal && !r.resolution_complete())
          in.issues.push_back({in.row.line, "sndr_db", Severity::warning,
                               "neither sndr_db nor enob given; resolution metrics unavailable"});
        return r;
      });
}

ParseResult parse_transceiver_csv(std::string_view text, std::string source) {
  return parse_document<TransceiverRecord>(
      text, std::move(source), kTransceiverColumns,
      [](RowReader& in) -> std::optional<TransceiverRecord> {
        TransceiverRecord t;
        if (auto id = in.text("id")) {
          t.id = *id;
        } else {
          in.fail("id", "id is required");
        }
        if (auto year = in.year()) t.year = *year;
        if (auto b = in.positive("bitrate_bps", "bitrate", true)) t.bitrate = *b;
        if (auto p = in.positive("power_w", "power", true)) t.power = *p;
        if (auto a = in.positive("area_mm2", "area", true)) t.area = *a;
        return t;
      });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string to_converter_csv(std::span<const SurveyRecord> records) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kConverterColumns); ++i) {
    if (i) out += ',';
    out += kConverterColumns[i];
  }
  out += '\n';
  auto opt_num = [](const std::optional<double>& v) { return v ? shortest(*v) : std::string(); };
  auto opt_text = [](const std::optional<std::string>& v) { return v ? csv::quote(*v) : std::string(); };
  for (const auto& r : records) {
    out += csv::quote(r.id) + ',' + std::to_string(r.year) + ',' + opt_text(r.venue) + ',' +
           (r.architecture ? std::string(to_string(*r.architecture)) : std::string()) + ',' +
           opt_num(r.tech_node) + ',' + shortest(r.power) + ',' + shortest(r.sample_rate) + ',' +
           opt_num(r.sndr) + ',' + opt_num(r.enob) + ',' + opt_num(r.area) + ',' + opt_text(r.notes) +
           '\n';
  }
  return out;
}

std::string to_transceiver_csv(std::span<const TransceiverRecord> records) {
  std::string out = "id,year,bitrate_bps,power_w,area_mm2\n";
  for (const auto& t : records) {
    out += csv::quote(t.id) + ',' + std::to_string(t.year) + ',' + shortest(t.bitrate) + ',' +
           shortest(t.power) + ',' + shortest(t.area) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

bool is_filter_field(std::string_view field) {
  static constexpr std::string_view kFields[] = {"year",    "tech_nm", "power_w",  "fs_hz",
                                                 "sndr_db", "enob",    "area_mm2", "architecture"};
  return std::find(std::begin(kFields), std::end(kFields), field) != std::end(kFields);
}

Condition parse_condition(std::string_view text) {
  static constexpr std::pair<std::string_view, Comparison> kOps[] = {
      {"<=", Comparison::le}, {">=", Comparison::ge}, {"==", Comparison::eq},
      {"!=", Comparison::ne}, {"<", Comparison::lt},  {">", Comparison::gt},
      {"=", Comparison::eq}};
  for (const auto& [symbol, op] : kOps) {
    const auto pos = text.find(symbol);
    if (pos == std::string_view::npos) continue;
    Condition c;
    c.field = std::string(trim(text.substr(0, pos)));
    c.op = op;
    const auto rhs = trim(text.substr(pos + symbol.size()));
    if (!is_filter_field(c.field)) throw std::invalid_argument("unknown filter field '" + c.field + "'");
    if (c.field == "architecture") {
      if (op != Comparison::eq && op != Comparison::ne)
        throw std::invalid_argument("architecture supports only == and !=");
      if (!parse_architecture(rhs))
        throw std::invalid_argument("unknown architecture '" + std::string(rhs) + "'");
      c.text = std::string(rhs);
    } else {
      const auto value = to_double(rhs);
      if (!value) throw std::invalid_argument("'" + std::string(rhs) + "' is not a number");
      c.number = *value;
    }
    return c;
  }
  throw std::invalid_argument("condition '" + std::string(text) + "' has no comparison operator");
}

bool Predicate::matches(const SurveyRecord& record) const {
  const bool all = std::all_of(conditions.begin(), conditions.end(),
                               [&](const Condition& c) { return condition_holds(record, c); });
  return negate ? !all : all;
}

std::string Predicate::describe() const {
  std::string out;
  for (const auto& c : conditions) {
    if (!out.empty()) out += " & ";
    out += c.field;
    out += comparison_symbol(c.op);
    out += c.field == "architecture" ? c.text : shortest(c.number);
  }
  if (out.empty()) out = "true";
  return negate ? "!(" + out + ")" : out;
}

Dataset filter_records(const Dataset& dataset, const Predicate& predicate) {
  for (const auto& c : predicate.conditions)
    if (!is_filter_field(c.field)) throw std::invalid_argument("unknown filter field '" + c.field + "'");
  std::vector<SurveyRecord> kept;
  for (const auto& r : dataset.records())
    if (predicate.matches(r)) kept.push_back(r);
  return Dataset(std::move(kept),
                 std::vector<TransceiverRecord>(dataset.transceivers().begin(),
                                                dataset.transceivers().end()),
                 dataset.provenance());
}

}  // namespace adcgap
