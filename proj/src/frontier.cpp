#include "adcgap/frontier.hpp"

#include <map>

namespace adcgap {

Objective parse_objective(std::string_view text) {
  const auto colon = text.find(':');
  Objective o;
  o.metric_key = std::string(text.substr(0, colon));
  require_metric_key(o.metric_key);
  o.direction = colon == std::string_view::npos ? preferred_direction(o.metric_key)
                                                : parse_direction(text.substr(colon + 1));
  return o;
}

FrontierResult pareto_frontier(const Dataset& dataset, std::span<const Objective> objectives,
                               double osr) {
  if (objectives.empty()) throw std::invalid_argument("pareto frontier: at least one objective required");
  for (const auto& o : objectives) require_metric_key(o.metric_key);

  const auto records = dataset.records();
  std::vector<std::size_t> complete;
  std::vector<Eigen::ArrayXd> columns;
  for (const auto& o : objectives) columns.push_back(metric_column(records, o.metric_key, osr));

  FrontierResult result;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const bool missing = std::any_of(columns.begin(), columns.end(), [&](const Eigen::ArrayXd& c) {
      return std::isnan(c(static_cast<Eigen::Index>(i)));
    });
    if (missing) {
      result.excluded.push_back(records[i].id);
    } else {
      complete.push_back(i);
    }
  }

  Eigen::MatrixXd values(static_cast<Eigen::Index>(complete.size()),
                         static_cast<Eigen::Index>(objectives.size()));
  for (std::size_t r = 0; r < complete.size(); ++r)
    for (std::size_t c = 0; c < objectives.size(); ++c)
      values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          columns[c](static_cast<Eigen::Index>(complete[r]));

  std::vector<Direction> directions;
  for (const auto& o : objectives) directions.push_back(o.direction);

  std::vector<const SurveyRecord*> front;
  for (Eigen::Index row : pareto_indices(values, directions))
    front.push_back(&records[complete[static_cast<std::size_t>(row)]]);
  std::sort(front.begin(), front.end(), [](const SurveyRecord* a, const SurveyRecord* b) {
    return a->year != b->year ? a->year < b->year : a->id < b->id;
  });
  for (const auto* r : front) result.ids.push_back(r->id);
  return result;
}

namespace {

bool better(double candidate, double incumbent, Direction d) {
  return d == Direction::maximize ? candidate > incumbent : candidate < incumbent;
}

template <typename Key>
void consider(std::map<Key, std::pair<double, std::string>>& best, Key key, double value,
              const std::string& id, Direction direction) {
  auto it = best.find(key);
  if (it == best.end()) {
    best.emplace(key, std::make_pair(value, id));
  } else if (better(value, it->second.first, direction) ||
             (value == it->second.first && id < it->second.second)) {
    it->second = {value, id};
  }
}

}  // namespace

EnvelopeSeries yearly_envelope(const Dataset& dataset, std::string_view metric_key,
                               Direction direction, const Predicate& eligibility, double osr) {
  require_metric_key(metric_key);
  std::map<int, std::pair<double, std::string>> best;
  for (const auto& r : dataset.records()) {
    if (!eligibility.matches(r)) continue;
    const auto value = metric_value(r, metric_key, osr);
    if (!value) continue;
    consider(best, r.year, *value, r.id, direction);
  }
  if (best.empty())
    throw std::invalid_argument("yearly envelope: no eligible record carries '" +
                                std::string(metric_key) + "'");
  EnvelopeSeries series{std::string(metric_key), direction, {}};
  for (const auto& [year, entry] : best) series.points.push_back({year, entry.first, entry.second});
  return series;
}

std::vector<GroupedPoint> best_per_group(const Dataset& dataset, std::string_view axis_key,
                                         std::string_view metric_key, Direction direction,
                                         double osr) {
  require_metric_key(axis_key);
  require_metric_key(metric_key);
  std::map<double, std::pair<double, std::string>> best;
  for (const auto& r : dataset.records()) {
    const DerivedMetrics m = derive_all(r, osr);
    const auto axis = metric_value(r, m, axis_key);
    const auto value = metric_value(r, m, metric_key);
    if (!axis || !value) continue;
    consider(best, *axis, *value, r.id, direction);
  }
  std::vector<GroupedPoint> out;
  for (const auto& [axis, entry] : best) out.push_back({axis, entry.first, entry.second});
  return out;
}

}  // namespace adcgap
