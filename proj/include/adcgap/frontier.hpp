#ifndef ADCGAP_FRONTIER_HPP
#define ADCGAP_FRONTIER_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "adcgap/dataset.hpp"
#include "adcgap/derived.hpp"

namespace adcgap {

struct Objective {
  std::string metric_key;
  Direction direction = Direction::maximize;
};

/// Parses "ebit:min" / "fs_hz:max"; a bare key takes the metric's preferred direction.
Objective parse_objective(std::string_view text);

namespace detail {
template <typename Scalar>
bool at_least_as_good(Scalar a, Scalar b, Direction d) {
  return d == Direction::maximize ? a >= b : a <= b;
}
template <typename Scalar>
bool strictly_better(Scalar a, Scalar b, Direction d) {
  return d == Direction::maximize ? a > b : a < b;
}
}  // namespace detail

/// True iff `a` is at least as good as `b` on every objective and strictly
/// better on one. Missing (NaN) entries or a size mismatch throw.
template <typename DerivedA, typename DerivedB>
bool dominates(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b,
               std::span<const Direction> directions) {
  const auto n = static_cast<Eigen::Index>(directions.size());
  if (a.size() != n || b.size() != n)
    throw std::invalid_argument("dominance check: vector size does not match objective count");
  bool strict = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ai = a.derived().coeff(i);
    const auto bi = b.derived().coeff(i);
    if (std::isnan(ai) || std::isnan(bi))
      throw std::invalid_argument("dominance check: missing objective value");
    const Direction d = directions[static_cast<std::size_t>(i)];
    if (!detail::at_least_as_good(ai, bi, d)) return false;
    strict = strict || detail::strictly_better(ai, bi, d);
  }
  return strict;
}

/// Row indices of the non-dominated rows of `values` (one row per point,
/// one column per objective), in ascending index order.
///
/// Rows are visited in lexicographically best-first order; any dominator of
/// a row sorts before it, so each row only needs checking against the
/// members accepted so far.
template <typename Derived>
std::vector<Eigen::Index> pareto_indices(const Eigen::MatrixBase<Derived>& values,
                                         std::span<const Direction> directions) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index cols = values.cols();
  if (cols == 0) throw std::invalid_argument("pareto frontier: at least one objective required");
  if (cols != static_cast<Eigen::Index>(directions.size()))
    throw std::invalid_argument("pareto frontier: column count does not match objective count");
  if (values.hasNaN()) throw std::invalid_argument("pareto frontier: missing objective value");

  // Orient every column so that larger is better.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> oriented = values;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (directions[static_cast<std::size_t>(c)] == Direction::minimize) oriented.col(c) *= Scalar(-1);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.rows()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (oriented(l, c) != oriented(r, c)) return oriented(l, c) > oriented(r, c);
    }
    return false;
  });

  const std::vector<Direction> up(static_cast<std::size_t>(cols), Direction::maximize);
  std::vector<Eigen::Index> front;
  for (Eigen::Index row : order) {
    const bool dominated = std::any_of(front.begin(), front.end(), [&](Eigen::Index f) {
      return dominates(oriented.row(f), oriented.row(row), up);
    });
    if (!dominated) front.push_back(row);
  }
  std::sort(front.begin(), front.end());
  return front;
}

struct FrontierResult {
  std::vector<std::string> ids;       // ordered by year, then id
  std::vector<std::string> excluded;  // records missing an objective value
};

FrontierResult pareto_frontier(const Dataset& dataset, std::span<const Objective> objectives,
                               double osr = 1.0);

struct EnvelopePoint {
  int year = 0;
  double value = 0.0;
  std::string record_id;
};

struct EnvelopeSeries {
  std::string metric_key;
  Direction direction = Direction::maximize;
  std::vector<EnvelopePoint> points;  // strictly increasing years
};

/// Best eligible value per calendar year; ties go to the smallest id.
/// Throws std::invalid_argument when no record is eligible.
EnvelopeSeries yearly_envelope(const Dataset& dataset, std::string_view metric_key,
                               Direction direction, const Predicate& eligibility = {},
                               double osr = 1.0);

/// Best value per distinct value of `axis_key` (e.g. per technology node).
struct GroupedPoint {
  double axis = 0.0;
  double value = 0.0;
  std::string record_id;
};
std::vector<GroupedPoint> best_per_group(const Dataset& dataset, std::string_view axis_key,
                                         std::string_view metric_key, Direction direction,
                                         double osr = 1.0);

}  // namespace adcgap

#endif  // ADCGAP_FRONTIER_HPP
