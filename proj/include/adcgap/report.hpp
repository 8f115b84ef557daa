#ifndef ADCGAP_REPORT_HPP
#define ADCGAP_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adcgap/budget.hpp"
#include "adcgap/dataset.hpp"
#include "adcgap/frontier.hpp"
#include "adcgap/gap.hpp"
#include "adcgap/trends.hpp"

namespace adcgap {

enum class Scale { linear, log10 };
std::string_view to_string(Scale scale);
Scale parse_scale(std::string_view text);

struct JitterBound {
  double sigma = 1e-13;  // s
};
struct RequirementBox {
  RequirementSpec spec;
};
struct ReferenceOverlay {
  std::string name;  // see reference_trends()
};
struct FittedOverlay {
  std::variant<TrendFit, PowerLawFit> fit;
  std::string label;
};
using Overlay = std::variant<JitterBound, RequirementBox, ReferenceOverlay, FittedOverlay>;

/// Splits a scatter into labelled series, either by a predicate (label is
/// the predicate text or its negation) or by architecture.
struct SeriesSplit {
  enum class Kind { predicate, architecture };
  Kind kind = Kind::predicate;
  Predicate predicate;
};

struct PlotSpec {
  std::string title;
  std::string x_key;
  std::string y_key;
  Scale x_scale = Scale::log10;
  Scale y_scale = Scale::log10;
  std::vector<Overlay> overlays;
  std::optional<SeriesSplit> split;
  double osr = 1.0;
};

struct SeriesRow {
  double x = 0.0;
  double y = 0.0;
  std::string id;
  int year = 0;
  std::string label;
};

/// Rectangular point table behind a figure. Rows are ordered by label,
/// then year, then id.
struct SeriesFile {
  std::vector<std::string> header{"x", "y", "id", "year", "label"};
  std::vector<SeriesRow> rows;
  std::string provenance;
};

/// Throws std::invalid_argument on unknown keys or when no record has both values.
SeriesFile emit_series(const Dataset& dataset, const PlotSpec& spec);
SeriesFile emit_series(const EnvelopeSeries& series, const PlotSpec& spec);

std::string to_csv(const SeriesFile& file);

struct Geometry {
  double width = 640.0;
  double height = 480.0;
  double margin_left = 80.0;
  double margin_right = 24.0;
  double margin_top = 40.0;
  double margin_bottom = 60.0;
};

/// Axis-aligned box in data coordinates; open sides are +-inf.
struct DataBox {
  double x_low, x_high, y_low, y_high;
};

/// The region a requirement set admits on the given axes, or nullopt when
/// neither axis carries a threshold.
std::optional<DataBox> requirement_region(const RequirementSpec& spec, std::string_view x_key,
                                          std::string_view y_key, double osr = 1.0);

/// Curve of an overlay in data coordinates, sampled over [x_low, x_high].
/// Log-scaled axes are sampled at every decade plus intermediate points.
std::vector<std::pair<double, double>> overlay_curve(const Overlay& overlay, const PlotSpec& spec,
                                                     double x_low, double x_high,
                                                     const SeriesFile& series);

/// Standalone SVG 1.1 document. Throws std::invalid_argument listing the
/// offending ids when a log axis meets non-positive data.
std::string emit_scatter_svg(const SeriesFile& series, const PlotSpec& spec,
                             const Geometry& geometry = {});

// ---------------------------------------------------------------------------
// Text reports. Values are shown with 4 significant digits in display units.

std::string format_sig(double value, int digits = 4);
std::string format_display(double value, std::string_view key, int digits = 4);

std::uint64_t fnv1a64(std::string_view bytes);
std::string dataset_hash(const Dataset& dataset);

std::string metrics_csv(const Dataset& dataset, double osr);
std::string budget_text(const PlatformSpec& platform, const AllocationPolicy& policy,
                        const BudgetCascade& cascade);
std::string budget_csv(const BudgetCascade& cascade);
std::string density_text(const DensityComparison& comparison);
std::string gap_text(const GapReport& report, const FeasibilityAssessment* feasibility = nullptr);
std::string verdicts_csv(const GapReport& report);
std::string transceiver_verdicts_csv(std::span<const TransceiverVerdict> verdicts);
std::string trend_text(std::string_view metric_key, FitAxis axis, Selector selector,
                       const SubsetFit& fit, std::optional<TimePoint> anchor,
                       std::optional<double> threshold);
std::string frontier_csv(const Dataset& dataset, std::span<const Objective> objectives,
                         const FrontierResult& result, double osr);
std::string envelope_csv(const EnvelopeSeries& series);

}  // namespace adcgap

#endif  // ADCGAP_REPORT_HPP
