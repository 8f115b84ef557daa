#include "adcgap/trends.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "adcgap/frontier.hpp"

namespace adcgap {

namespace {

template <typename Point, typename AxisOf>
void check_points(std::span<const Point> points, AxisOf axis_of, bool positive_axis,
                  const char* what) {
  if (points.size() < 3)
    throw FitError(std::string(what) + ": need at least 3 points, got " + std::to_string(points.size()));
  for (const auto& p : points) {
    if (!(p.value > 0.0) || !std::isfinite(p.value))
      throw FitError(std::string(what) + ": values must be finite and positive");
    const double a = axis_of(p);
    if (!std::isfinite(a) || (positive_axis && !(a > 0.0)))
      throw FitError(std::string(what) + ": abscissa must be finite" +
                     (positive_axis ? " and positive" : ""));
  }
}

}  // namespace

TrendFit fit_doubling(std::span<const TimePoint> points) {
  check_points(points, [](const TimePoint& p) { return p.year; }, false, "doubling fit");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::ArrayXd years(n), log_values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    years(i) = points[static_cast<std::size_t>(i)].year;
    log_values(i) = std::log2(points[static_cast<std::size_t>(i)].value);
  }
  const LineFit<double> line = fit_line<double>(years, log_values);

  TrendFit fit;
  fit.slope = line.slope;
  fit.reference_year = static_cast<int>(std::floor(years.maxCoeff()));
  // Evaluate at the reference year through the centroid to avoid cancellation.
  fit.intercept = log_values.mean() + line.slope * (fit.reference_year - years.mean());
  fit.r_squared = line.r_squared;
  fit.n_points = static_cast<int>(n);
  return fit;
}

PowerLawFit fit_power_law(std::span<const PowerPoint> points) {
  check_points(points, [](const PowerPoint& p) { return p.feature_size; }, true, "power-law fit");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::ArrayXd log_size(n), log_values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    log_size(i) = std::log10(points[static_cast<std::size_t>(i)].feature_size);
    log_values(i) = std::log10(points[static_cast<std::size_t>(i)].value);
  }
  const LineFit<double> line = fit_line<double>(log_size, log_values);
  return {line.slope, line.intercept, line.r_squared, static_cast<int>(n)};
}

TrendFit trend_from_period(double signed_period, double anchor_year, double anchor_value) {
  if (signed_period == 0.0 || !std::isfinite(signed_period))
    throw FitError("trend period must be finite and non-zero");
  if (!(anchor_value > 0.0)) throw FitError("trend anchor value must be positive");
  TrendFit fit;
  fit.slope = 1.0 / signed_period;
  fit.reference_year = static_cast<int>(std::floor(anchor_year));
  fit.intercept = std::log2(anchor_value) + fit.slope * (fit.reference_year - anchor_year);
  fit.r_squared = 1.0;
  fit.n_points = 0;
  return fit;
}

double extrapolate(const TrendFit& fit, double year) {
  return std::exp2(fit.intercept + fit.slope * (year - fit.reference_year));
}

std::optional<double> threshold_year(const TrendFit& fit, TimePoint anchor, double threshold,
                                     Direction goal) {
  if (!(threshold > 0.0) || !(anchor.value > 0.0))
    throw std::domain_error("threshold and anchor value must be positive");
  const bool met = goal == Direction::minimize ? anchor.value <= threshold : anchor.value >= threshold;
  if (met) return anchor.year;
  const bool toward = goal == Direction::minimize ? fit.slope < 0.0 : fit.slope > 0.0;
  if (!toward) return std::nullopt;
  return anchor.year + std::log2(threshold / anchor.value) / fit.slope;
}

std::optional<double> threshold_year(const TrendFit& fit, TimePoint anchor, double threshold) {
  if (!(threshold > 0.0) || !(anchor.value > 0.0))
    throw std::domain_error("threshold and anchor value must be positive");
  if (anchor.value == threshold) return anchor.year;
  return threshold_year(fit, anchor, threshold,
                        threshold < anchor.value ? Direction::minimize : Direction::maximize);
}

std::string_view to_string(FitAxis axis) { return axis == FitAxis::year ? "year" : "tech_nm"; }

std::string_view to_string(Selector selector) {
  switch (selector) {
    case Selector::all: return "all";
    case Selector::frontier: return "frontier";
    case Selector::yearly_best: return "yearly_best";
  }
  return "all";
}

FitAxis parse_axis(std::string_view text) {
  if (text == "year") return FitAxis::year;
  if (text == "tech_nm" || text == "tech_node" || text == "node") return FitAxis::tech_node;
  throw std::invalid_argument("unknown fit axis '" + std::string(text) + "' (use year or tech_nm)");
}

Selector parse_selector(std::string_view text) {
  if (text == "all") return Selector::all;
  if (text == "frontier") return Selector::frontier;
  if (text == "yearly_best" || text == "best") return Selector::yearly_best;
  throw std::invalid_argument("unknown selector '" + std::string(text) +
                              "' (use all, frontier or yearly_best)");
}

SubsetFit fit_on_subset(const Dataset& dataset, std::string_view metric_key, FitAxis axis,
                        Selector selector, double osr) {
  return fit_on_subset(dataset, metric_key, axis, selector, preferred_direction(metric_key), osr);
}

SubsetFit fit_on_subset(const Dataset& dataset, std::string_view metric_key, FitAxis axis,
                        Selector selector, Direction direction, double osr) {
  require_metric_key(metric_key);
  const std::string axis_key(to_string(axis));

  struct Sample {
    double axis;
    double value;
    std::string id;
  };
  std::vector<Sample> samples;

  auto collect = [&](const SurveyRecord& r) {
    const DerivedMetrics m = derive_all(r, osr);
    const auto a = metric_value(r, m, axis_key);
    const auto v = metric_value(r, m, metric_key);
    if (a && v) samples.push_back({*a, *v, r.id});
  };

  switch (selector) {
    case Selector::all:
      for (const auto& r : dataset.records()) collect(r);
      break;
    case Selector::frontier: {
      // Reaching a value earlier, or on an older node, is the harder feat.
      const Objective objectives[] = {
          {axis_key, axis == FitAxis::year ? Direction::minimize : Direction::maximize},
          {std::string(metric_key), direction}};
      for (const auto& id : pareto_frontier(dataset, objectives, osr).ids) collect(*dataset.find(id));
      break;
    }
    case Selector::yearly_best:
      for (const auto& g : best_per_group(dataset, axis_key, metric_key, direction, osr))
        samples.push_back({g.axis, g.value, g.record_id});
      break;
  }

  if (samples.size() < 3)
    throw FitError("selector '" + std::string(to_string(selector)) + "' yields " +
                   std::to_string(samples.size()) + " usable points for '" +
                   std::string(metric_key) + "' against " + axis_key + "; at least 3 needed");

  std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
    return a.axis != b.axis ? a.axis < b.axis : a.id < b.id;
  });

  SubsetFit out;
  for (const auto& s : samples) {
    out.record_ids.push_back(s.id);
    out.axis_values.push_back(s.axis);
    out.metric_values.push_back(s.value);
  }
  if (axis == FitAxis::year) {
    std::vector<TimePoint> points;
    for (const auto& s : samples) points.push_back({s.axis, s.value});
    out.fit = fit_doubling(points);
  } else {
    std::vector<PowerPoint> points;
    for (const auto& s : samples) points.push_back({s.axis, s.value});
    out.fit = fit_power_law(points);
  }
  return out;
}

namespace {
constexpr std::array<ReferenceTrend, 7> kReferenceTrends = {{
    {"speed-resolution-4yr", "f_s * 2^ENOB doubles every 4 years", FitAxis::year, 4.0},
    {"ebit-1.8yr", "single-bit energy halves every 1.8 years", FitAxis::year, -1.8},
    {"density-1.8yr", "sampling density doubles every 1.8 years", FitAxis::year, 1.8},
    {"energy-lambda-1.7", "energy scales as feature size^1.7", FitAxis::tech_node, 1.7},
    {"sar-energy-lambda-2.3", "SAR energy scales as feature size^2.3", FitAxis::tech_node, 2.3},
    {"area-lambda-2", "area scales as feature size^2", FitAxis::tech_node, 2.0},
    {"area-lambda-1.6", "area scales as feature size^1.6", FitAxis::tech_node, 1.6},
}};
}  // namespace

std::span<const ReferenceTrend> reference_trends() { return kReferenceTrends; }

const ReferenceTrend& reference_trend(std::string_view name) {
  for (const auto& t : kReferenceTrends)
    if (t.name == name) return t;
  throw std::invalid_argument("unknown reference trend '" + std::string(name) + "'");
}

}  // namespace adcgap
