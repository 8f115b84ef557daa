#include <doctest.h>

#include <random>

#include "adcgap/frontier.hpp"
#include "oracle.hpp"

using namespace adcgap;

namespace {

const Dataset& sample() {
  static const Dataset d =
      parse_converter_csv(read_text_file(std::string(ADCGAP_DATA_DIR) + "/sample_converters.csv")).dataset;
  return d;
}

}  // namespace

TEST_CASE("hand example") {
  Eigen::MatrixXd pts(3, 2);
  pts << 1, 1, 2, 2, 3, 1;
  const std::vector<Direction> up(2, Direction::maximize);
  CHECK(pareto_indices(pts, up) == std::vector<Eigen::Index>{1, 2});

  const std::vector<Direction> mixed{Direction::maximize, Direction::minimize};
  CHECK(pareto_indices(pts, mixed) == std::vector<Eigen::Index>{2});
}

TEST_CASE("duplicates are all kept") {
  Eigen::MatrixXd pts(4, 2);
  pts << 2, 2, 2, 2, 1, 1, 0, 3;
  const std::vector<Direction> up(2, Direction::maximize);
  CHECK(pareto_indices(pts, up) == std::vector<Eigen::Index>{0, 1, 3});
}

TEST_CASE("dominance") {
  const std::vector<Direction> d{Direction::maximize, Direction::minimize};
  Eigen::Vector2d a(2, 1), b(1, 1), c(2, 1);
  CHECK(dominates(a, b, d));
  CHECK_FALSE(dominates(b, a, d));
  CHECK_FALSE(dominates(a, c, d));
  CHECK_THROWS(dominates(a, Eigen::Vector3d(1, 1, 1), d));
  CHECK_THROWS(dominates(a, Eigen::Vector2d(NAN, 1), d));
}

TEST_CASE("matches brute force on small integer grids") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 60);
    const int k = 2 + static_cast<int>(rng() % 3);
    Eigen::MatrixXd m(n, k);
    std::vector<std::vector<double>> rows(n, std::vector<double>(k));
    std::vector<Direction> dirs(k);
    for (int c = 0; c < k; ++c) dirs[c] = rng() % 2 ? Direction::maximize : Direction::minimize;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < k; ++c) {
        m(r, c) = static_cast<double>(rng() % 6);
        rows[r][c] = dirs[c] == Direction::maximize ? m(r, c) : -m(r, c);
      }
    const auto got = pareto_indices(m, dirs);
    const auto want = oracle::brute_force_front(rows);
    CHECK(std::vector<int>(got.begin(), got.end()) == want);
  }
}

TEST_CASE("frontier members are mutually non-dominated and cover the rest") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(200, 3);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  const std::vector<Direction> d(3, Direction::maximize);
  const auto front = pareto_indices(m, d);
  for (auto a : front)
    for (auto b : front) CHECK_FALSE(dominates(m.row(a), m.row(b), d));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (std::binary_search(front.begin(), front.end(), r)) continue;
    CHECK(std::any_of(front.begin(), front.end(), [&](Eigen::Index f) { return dominates(m.row(f), m.row(r), d); }));
  }
}

TEST_CASE("invalid matrices") {
  const std::vector<Direction> d(2, Direction::maximize);
  Eigen::MatrixXd nan(1, 2);
  nan << 1, NAN;
  CHECK_THROWS(pareto_indices(nan, d));
  CHECK_THROWS(pareto_indices(Eigen::MatrixXd(2, 3), d));
  CHECK(pareto_indices(Eigen::MatrixXd(0, 2), d).empty());
}

TEST_CASE("objective parsing") {
  CHECK(parse_objective("ebit:min").direction == Direction::minimize);
  CHECK(parse_objective("fs_hz").direction == Direction::maximize);
  CHECK(parse_objective("area_mm2").direction == Direction::minimize);
  CHECK_THROWS(parse_objective("speed:max"));
  CHECK_THROWS(parse_objective("ebit:down"));
}

TEST_CASE("dataset frontier excludes incomplete records") {
  const std::vector<Objective> obj{parse_objective("ebit:min"), parse_objective("enob:max")};
  const FrontierResult r = pareto_frontier(sample(), obj);
  CHECK(std::find(r.excluded.begin(), r.excluded.end(), "kull14") != r.excluded.end());
  CHECK(std::find(r.ids.begin(), r.ids.end(), "xu17") != r.ids.end());
  CHECK(r.ids.size() + r.excluded.size() <= sample().records().size());
  for (std::size_t i = 1; i < r.ids.size(); ++i)
    CHECK(sample().find(r.ids[i - 1])->year <= sample().find(r.ids[i])->year);
}

TEST_CASE("yearly envelope") {
  const EnvelopeSeries e = yearly_envelope(sample(), "ebit", Direction::minimize);
  REQUIRE_FALSE(e.points.empty());
  for (std::size_t i = 1; i < e.points.size(); ++i) CHECK(e.points[i - 1].year < e.points[i].year);
  for (const auto& p : e.points)
    for (const auto& r : sample().records())
      if (r.year == p.year) CHECK(*metric_value(r, "ebit") >= p.value);
  const auto xu = std::find_if(e.points.begin(), e.points.end(), [](const auto& p) { return p.year == 2017; });
  REQUIRE(xu != e.points.end());
  CHECK(xu->record_id == "xu17");

  Predicate none;
  none.conditions.push_back(parse_condition("year<1900"));
  CHECK_THROWS_AS(yearly_envelope(sample(), "ebit", Direction::minimize, none), std::invalid_argument);
}

TEST_CASE("best per technology node") {
  const auto groups = best_per_group(sample(), "tech_nm", "ebit", Direction::minimize);
  REQUIRE(groups.size() >= 3);
  for (std::size_t i = 1; i < groups.size(); ++i) CHECK(groups[i - 1].axis < groups[i].axis);
}
