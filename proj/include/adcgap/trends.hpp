#ifndef ADCGAP_TRENDS_HPP
#define ADCGAP_TRENDS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "adcgap/dataset.hpp"
#include "adcgap/derived.hpp"

namespace adcgap {

class FitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Scalar>
struct LineFit {
  Scalar slope = 0;
  Scalar intercept = 0;  // value of the line at x = 0
  Scalar r_squared = 0;
  Eigen::Index n_points = 0;
};

/// Ordinary least squares y = intercept + slope * x. The abscissa is
/// centred before solving to keep year-valued inputs well conditioned.
template <typename Scalar>
LineFit<Scalar> fit_line(const Eigen::Ref<const Eigen::Array<Scalar, Eigen::Dynamic, 1>>& x,
                         const Eigen::Ref<const Eigen::Array<Scalar, Eigen::Dynamic, 1>>& y) {
  if (x.size() != y.size()) throw FitError("line fit: x and y differ in length");
  if (x.size() < 2) throw FitError("line fit: need at least two points");
  const Eigen::Index n = x.size();
  const Scalar x_mean = x.mean();
  const Scalar y_mean = y.mean();

  Eigen::Matrix<Scalar, Eigen::Dynamic, 2> design(n, 2);
  design.col(0).setOnes();
  design.col(1) = (x - x_mean).matrix();
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs = (y - y_mean).matrix();
  const Scalar sxx = design.col(1).squaredNorm();
  if (!(sxx > Scalar(0))) throw FitError("line fit: abscissa values are all identical");
  const Scalar slope = design.col(1).dot(rhs) / sxx;

  LineFit<Scalar> fit;
  fit.slope = slope;
  fit.intercept = y_mean - slope * x_mean;
  fit.n_points = n;
  const Eigen::Array<Scalar, Eigen::Dynamic, 1> residual = (y - y_mean) - slope * (x - x_mean);
  const Scalar ss_res = residual.square().sum();
  const Scalar ss_tot = (y - y_mean).square().sum();
  if (ss_tot > Scalar(0)) {
    fit.r_squared = std::clamp(Scalar(1) - ss_res / ss_tot, Scalar(0), Scalar(1));
  } else {
    fit.r_squared = Scalar(1);  // constant data is fitted exactly by a flat line
  }
  return fit;
}

struct TimePoint {
  double year = 0.0;
  double value = 0.0;
};

struct PowerPoint {
  double feature_size = 0.0;  // nm
  double value = 0.0;
};

/// Exponential-in-time trend: log2(value) = intercept + slope (year - reference_year).
struct TrendFit {
  double slope = 0.0;  // log2 units per year
  double intercept = 0.0;
  int reference_year = 0;
  double r_squared = 0.0;
  int n_points = 0;

  bool increasing() const { return slope > 0.0; }
  std::optional<double> doubling_time() const {
    return slope > 0.0 ? std::optional<double>(1.0 / slope) : std::nullopt;
  }
  std::optional<double> halving_time() const {
    return slope < 0.0 ? std::optional<double>(-1.0 / slope) : std::nullopt;
  }
};

/// value = 10^log_coefficient * feature_size^exponent.
struct PowerLawFit {
  double exponent = 0.0;
  double log_coefficient = 0.0;
  double r_squared = 0.0;
  int n_points = 0;

  double evaluate(double feature_size) const {
    return std::pow(10.0, log_coefficient) * std::pow(feature_size, exponent);
  }
};

/// Throws FitError with fewer than 3 points or a non-positive value.
TrendFit fit_doubling(std::span<const TimePoint> points);
PowerLawFit fit_power_law(std::span<const PowerPoint> points);

/// Builds a TrendFit directly from a doubling (positive) or halving
/// (negative) time through an anchor point.
TrendFit trend_from_period(double signed_period, double anchor_year, double anchor_value);

double extrapolate(const TrendFit& fit, double year);

/// Year at which a trend through `anchor` reaches `threshold`, or nullopt
/// when the trend moves away from it. `goal` says which side of the
/// threshold counts as met (minimize: value <= threshold); an anchor already
/// on that side projects to its own year.
std::optional<double> threshold_year(const TrendFit& fit, TimePoint anchor, double threshold,
                                     Direction goal);

/// Treats `threshold` as a target to reach from the anchor: the goal is
/// whichever side of the anchor the threshold lies on.
std::optional<double> threshold_year(const TrendFit& fit, TimePoint anchor, double threshold);

enum class FitAxis { year, tech_node };
enum class Selector { all, frontier, yearly_best };

std::string_view to_string(FitAxis axis);
std::string_view to_string(Selector selector);
FitAxis parse_axis(std::string_view text);
Selector parse_selector(std::string_view text);

struct SubsetFit {
  std::variant<TrendFit, PowerLawFit> fit;
  std::vector<std::string> record_ids;  // points used, in axis order
  std::vector<double> axis_values;
  std::vector<double> metric_values;
};

/// Selects points from the dataset and fits them against the axis.
///   all          every record carrying both the metric and the axis value
///   frontier     Pareto-optimal records on (axis, metric); older/larger-node
///                designs count as harder, so the frontier is the best-so-far edge
///   yearly_best  best metric value per axis group (per year or per node)
/// Throws FitError naming the selector when fewer than 3 points remain.
SubsetFit fit_on_subset(const Dataset& dataset, std::string_view metric_key, FitAxis axis,
                        Selector selector, double osr = 1.0);
SubsetFit fit_on_subset(const Dataset& dataset, std::string_view metric_key, FitAxis axis,
                        Selector selector, Direction direction, double osr = 1.0);

/// Published scaling tendencies kept for overlays and comparison. These are
/// never substituted for fitted values.
struct ReferenceTrend {
  std::string_view name;
  std::string_view description;
  FitAxis axis;
  double value;  // doubling/halving years (signed) for time trends, exponent for power laws
};
std::span<const ReferenceTrend> reference_trends();
const ReferenceTrend& reference_trend(std::string_view name);

}  // namespace adcgap

#endif  // ADCGAP_TRENDS_HPP
