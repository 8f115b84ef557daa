#include "adcgap/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "adcgap/budget.hpp"
#include "adcgap/config.hpp"
#include "adcgap/dataset.hpp"
#include "adcgap/frontier.hpp"
#include "adcgap/gap.hpp"
#include "adcgap/report.hpp"
#include "adcgap/trends.hpp"

namespace adcgap {

namespace {

namespace fs = std::filesystem;

/// Bad flag values; reported with exit code 1 like parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string data;
  std::string transceivers;
  std::string config;
  std::string out;
  std::string format = "text";
  std::optional<double> osr;

  // subcommand specific
  std::vector<std::string> objectives;
  std::vector<std::string> filters;
  std::string envelope;
  std::string direction;
  std::string metric;
  std::string axis = "year";
  std::string selector = "yearly_best";
  std::optional<double> threshold;
  std::optional<double> anchor_year;
  std::optional<double> anchor_value;
  std::vector<std::string> references;
  std::string spec;
  bool project = false;
  std::optional<double> energy_halving;
  std::string x_key;
  std::string y_key;
  std::string x_scale = "log10";
  std::string y_scale = "log10";
  std::string split;
  std::vector<double> jitters;
  std::vector<std::string> boxes;
  bool fit = false;
  std::string title;
};

/// Collects named artifacts; writes them under --out or prints the one
/// matching --format.
class Sink {
 public:
  Sink(const Options& o, std::ostream& out) : options_(o), out_(out) {}

  void add(std::string format, std::string filename, std::string content) {
    artifacts_.push_back({std::move(format), std::move(filename), std::move(content)});
  }

  void flush() {
    if (!options_.out.empty()) {
      std::error_code ec;
      fs::create_directories(options_.out, ec);
      if (ec) throw DataError("cannot create output directory '" + options_.out + "': " + ec.message());
      for (const auto& a : artifacts_) {
        const fs::path path = fs::path(options_.out) / a.filename;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw DataError("cannot write '" + path.string() + "'");
        file << a.content;
        out_ << "wrote " << path.string() << '\n';
      }
      return;
    }
    for (const auto& a : artifacts_) {
      if (a.format == options_.format) {
        out_ << a.content;
        return;
      }
    }
    // Nothing in the requested format: fall back to the first artifact.
    if (!artifacts_.empty()) out_ << artifacts_.front().content;
  }

 private:
  struct Artifact {
    std::string format, filename, content;
  };
  const Options& options_;
  std::ostream& out_;
  std::vector<Artifact> artifacts_;
};

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Config load_config(const Options& o) {
  if (o.config.empty()) return {};
  return Config::load(o.config);
}

double resolve_osr(const Options& o, const Config& config) {
  const double osr = o.osr ? *o.osr : config.get_number("analysis.osr").value_or(1.0);
  if (!(osr >= 1.0)) throw UsageError("--osr must be >= 1");
  return osr;
}

Dataset load_converters(const Options& o, std::ostream& err) {
  if (o.data.empty()) throw UsageError("--data is required");
  ParseResult parsed = parse_converter_csv(read_text_file(o.data), o.data);
  for (const auto& issue : parsed.issues)
    if (issue.severity == Severity::fatal)
      err << o.data << ":" << issue.row << ": " << issue.column << ": " << issue.message << " (row skipped)\n";
  return parsed.dataset;
}

Dataset load_transceivers(const Options& o, std::ostream& err) {
  ParseResult parsed = parse_transceiver_csv(read_text_file(o.transceivers), o.transceivers);
  for (const auto& issue : parsed.issues)
    if (issue.severity == Severity::fatal)
      err << o.transceivers << ":" << issue.row << ": " << issue.column << ": " << issue.message
          << " (row skipped)\n";
  return parsed.dataset;
}

Predicate parse_predicate(const std::vector<std::string>& conditions) {
  Predicate p;
  for (const auto& c : conditions) p.conditions.push_back(as_usage([&] { return parse_condition(c); }));
  return p;
}

std::string issues_text(const std::vector<ParseIssue>& issues) {
  std::string out;
  for (const auto& i : issues)
    out += std::to_string(i.row) + "," + i.column + "," +
           (i.severity == Severity::fatal ? "fatal" : "warning") + "," + i.message + "\n";
  return out;
}

// ---------------------------------------------------------------------------

void cmd_ingest(const Options& o, Sink& sink) {
  if (o.data.empty() && o.transceivers.empty()) throw UsageError("--data or --transceivers is required");
  std::string summary;
  if (!o.data.empty()) {
    const ParseResult r = parse_converter_csv(read_text_file(o.data), o.data);
    summary += o.data + ": " + std::to_string(r.dataset.records().size()) + " converter records, " +
               std::to_string(r.issues.size()) + " issues\n" + issues_text(r.issues);
    sink.add("csv", "converters.csv", to_converter_csv(r.dataset.records()));
    sink.add("text", "converters_issues.txt", issues_text(r.issues));
  }
  if (!o.transceivers.empty()) {
    const ParseResult r = parse_transceiver_csv(read_text_file(o.transceivers), o.transceivers);
    summary += o.transceivers + ": " + std::to_string(r.dataset.transceivers().size()) +
               " transceiver records, " + std::to_string(r.issues.size()) + " issues\n" +
               issues_text(r.issues);
    sink.add("csv", "transceivers.csv", to_transceiver_csv(r.dataset.transceivers()));
    sink.add("text", "transceivers_issues.txt", issues_text(r.issues));
  }
  sink.add("text", "ingest.txt", summary);
}

void cmd_metrics(const Options& o, Sink& sink, std::ostream& err) {
  const Config config = load_config(o);
  const double osr = resolve_osr(o, config);
  const Dataset data = load_converters(o, err);
  sink.add("csv", "metrics.csv", metrics_csv(data, osr));
}

void cmd_budget(const Options& o, Sink& sink, std::ostream& err) {
  const Config config = load_config(o);
  const PlatformSpec platform = as_usage([&] { return platform_from_config(config); });
  const AllocationPolicy policy = as_usage([&] { return policy_from_config(config); });
  const BudgetCascade b = cascade(platform, policy);
  std::string text = budget_text(platform, policy, b);
  if (!o.data.empty() && !o.transceivers.empty()) {
    const DensityComparison d =
        density_comparison(load_converters(o, err), load_transceivers(o, err), resolve_osr(o, config));
    text += "\n" + density_text(d);
  }
  sink.add("text", "budget.txt", text);
  sink.add("csv", "budget.csv", budget_csv(b));
}

void cmd_frontier(const Options& o, Sink& sink, std::ostream& err) {
  const Config config = load_config(o);
  const double osr = resolve_osr(o, config);
  const Predicate eligibility = parse_predicate(o.filters);
  if (o.objectives.empty() && o.envelope.empty()) throw UsageError("give --objective or --envelope");

  std::vector<Objective> objectives;
  for (const auto& text : o.objectives) objectives.push_back(as_usage([&] { return parse_objective(text); }));
  std::optional<Direction> direction;
  if (!o.direction.empty()) direction = as_usage([&] { return parse_direction(o.direction); });
  if (!o.envelope.empty()) as_usage([&] { require_metric_key(o.envelope); });

  const Dataset data = load_converters(o, err);
  const Dataset eligible = filter_records(data, eligibility);

  if (!objectives.empty()) {
    const FrontierResult result = pareto_frontier(eligible, objectives, osr);
    std::string text = "pareto frontier (" + std::to_string(result.ids.size()) + " of " +
                       std::to_string(eligible.records().size()) + " records):\n";
    for (const auto& id : result.ids) text += "  " + id + "\n";
    if (!result.excluded.empty()) {
      text += "excluded for missing objectives:";
      for (const auto& id : result.excluded) text += " " + id;
      text += "\n";
    }
    sink.add("text", "frontier.txt", text);
    sink.add("csv", "frontier.csv", frontier_csv(eligible, objectives, result, osr));
  }
  if (!o.envelope.empty()) {
    const Direction d = direction.value_or(preferred_direction(o.envelope));
    const EnvelopeSeries series = yearly_envelope(data, o.envelope, d, eligibility, osr);
    sink.add("csv", "envelope.csv", envelope_csv(series));
    PlotSpec spec;
    spec.title = "yearly best " + o.envelope;
    spec.x_key = "year";
    spec.y_key = o.envelope;
    spec.x_scale = Scale::linear;
    spec.y_scale = Scale::log10;
    spec.osr = osr;
    sink.add("svg", "envelope.svg", emit_scatter_svg(emit_series(series, spec), spec));
  }
}

void cmd_trend(const Options& o, Sink& sink, std::ostream& err) {
  const Config config = load_config(o);
  const double osr = resolve_osr(o, config);
  if (o.metric.empty()) throw UsageError("--metric is required");
  as_usage([&] { require_metric_key(o.metric); });
  const FitAxis axis = as_usage([&] { return parse_axis(o.axis); });
  const Selector selector = as_usage([&] { return parse_selector(o.selector); });
  const Direction direction =
      o.direction.empty() ? preferred_direction(o.metric) : as_usage([&] { return parse_direction(o.direction); });
  for (const auto& r : o.references) as_usage([&] { reference_trend(r); });
  if (o.anchor_year.has_value() != o.anchor_value.has_value())
    throw UsageError("--anchor-year and --anchor-value go together");
  if (o.threshold && !(*o.threshold > 0.0)) throw UsageError("--threshold must be positive");

  const Dataset data = filter_records(load_converters(o, err), parse_predicate(o.filters));
  const SubsetFit fit = fit_on_subset(data, o.metric, axis, selector, direction, osr);

  std::optional<TimePoint> anchor;
  if (o.anchor_year) {
    anchor = TimePoint{*o.anchor_year, *o.anchor_value};
  } else if (axis == FitAxis::year) {
    // Best point among those fitted, latest year on ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < fit.metric_values.size(); ++i) {
      const double v = fit.metric_values[i], b = fit.metric_values[best];
      if (direction == Direction::maximize ? v >= b : v <= b) best = i;
    }
    anchor = TimePoint{fit.axis_values[best], fit.metric_values[best]};
  }
  sink.add("text", "trend.txt", trend_text(o.metric, axis, selector, fit, anchor, o.threshold));

  std::string points = std::string(to_string(axis)) + "," + o.metric + ",id\n";
  for (std::size_t i = 0; i < fit.record_ids.size(); ++i)
    points += format_exact(fit.axis_values[i]) + "," + format_exact(fit.metric_values[i]) + "," +
              fit.record_ids[i] + "\n";
  sink.add("csv", "trend_points.csv", points);

  PlotSpec spec;
  spec.title = o.metric + " vs " + std::string(to_string(axis)) + " (" + std::string(to_string(selector)) + ")";
  spec.x_key = std::string(to_string(axis));
  spec.y_key = o.metric;
  spec.x_scale = axis == FitAxis::year ? Scale::linear : Scale::log10;
  spec.y_scale = Scale::log10;
  spec.osr = osr;
  spec.overlays.push_back(FittedOverlay{fit.fit, "fit"});
  for (const auto& r : o.references) spec.overlays.push_back(ReferenceOverlay{r});
  SeriesFile series;
  for (std::size_t i = 0; i < fit.record_ids.size(); ++i) {
    const SurveyRecord* rec = data.find(fit.record_ids[i]);
    series.rows.push_back({fit.axis_values[i], fit.metric_values[i], fit.record_ids[i], rec->year,
                           std::string(to_string(selector))});
  }
  series.provenance = "trend metric=" + o.metric + " dataset=" + dataset_hash(data);
  sink.add("svg", "trend.svg", emit_scatter_svg(series, spec));
}

void cmd_gap(const Options& o, Sink& sink, std::ostream& err) {
  const Config config = load_config(o);
  const double osr = resolve_osr(o, config);

  if (is_scenario_preset(o.spec)) {
    if (o.transceivers.empty()) throw UsageError("--spec table1-scenario needs --transceivers");
    const ScenarioSpec scenario = scenario_preset(o.spec);
    const Dataset tx = load_transceivers(o, err);
    std::vector<TransceiverVerdict> verdicts;
    int pass = 0;
    for (const auto& t : tx.transceivers()) {
      verdicts.push_back(evaluate_transceiver(t, scenario));
      pass += verdicts.back().overall_pass() ? 1 : 0;
    }
    sink.add("text", "gap_report.txt",
             "scenario: " + scenario.name + "\ntransceivers: " + std::to_string(verdicts.size()) +
                 ", overall pass: " + std::to_string(pass) + "\n");
    sink.add("csv", "gap_verdicts.csv", transceiver_verdicts_csv(verdicts));
    return;
  }

  RequirementSpec spec;
  if (!o.spec.empty()) {
    spec = as_usage([&] { return requirement_preset(o.spec); });
  } else if (config.has_section("requirement")) {
    spec = as_usage([&] { return requirement_from_config(config, requirement_preset("table2-adc")); });
  } else {
    spec = requirement_preset("table2-adc");
  }
  if (o.energy_halving && !(*o.energy_halving > 0.0)) throw UsageError("--energy-halving must be positive");

  const Dataset data = load_converters(o, err);
  const GapReport report = gap_report(data, spec, osr);

  std::optional<FeasibilityAssessment> feasibility;
  if (o.project || o.energy_halving) {
    std::map<Criterion, TrendFit> fits;
    for (Criterion c : kCriteria) {
      try {
        const SubsetFit f = fit_on_subset(data, criterion_metric(c), FitAxis::year, Selector::yearly_best, osr);
        fits[c] = std::get<TrendFit>(f.fit);
      } catch (const FitError& e) {
        err << "no trend for " << to_string(c) << ": " << e.what() << "\n";
      }
    }
    if (o.energy_halving) {
      const CriterionSummary& energy = report[Criterion::energy];
      if (energy.best_measured)
        fits[Criterion::energy] =
            trend_from_period(-*o.energy_halving, energy.best_year, *energy.best_measured);
    }
    feasibility = feasibility_assessment(report, fits);
  }

  sink.add("text", "gap_report.txt", gap_text(report, feasibility ? &*feasibility : nullptr));
  sink.add("csv", "gap_verdicts.csv", verdicts_csv(report));
}

void cmd_plot(const Options& o, Sink& sink, std::ostream& err) {
  const Config config = load_config(o);
  PlotSpec spec;
  spec.osr = resolve_osr(o, config);
  if (o.x_key.empty() || o.y_key.empty()) throw UsageError("--x and --y are required");
  as_usage([&] {
    require_metric_key(o.x_key);
    require_metric_key(o.y_key);
  });
  spec.x_key = o.x_key;
  spec.y_key = o.y_key;
  spec.title = o.title.empty() ? o.y_key + " vs " + o.x_key : o.title;
  spec.x_scale = as_usage([&] { return parse_scale(o.x_scale); });
  spec.y_scale = as_usage([&] { return parse_scale(o.y_scale); });
  if (o.split == "architecture") {
    spec.split = SeriesSplit{SeriesSplit::Kind::architecture, {}};
  } else if (!o.split.empty()) {
    spec.split = SeriesSplit{SeriesSplit::Kind::predicate, parse_predicate({o.split})};
  }
  for (double sigma : o.jitters) {
    if (!(sigma > 0.0)) throw UsageError("--jitter must be positive");
    spec.overlays.push_back(JitterBound{sigma});
  }
  for (const auto& name : o.boxes) {
    RequirementSpec box = as_usage([&] { return requirement_preset(name); });
    spec.overlays.push_back(RequirementBox{box});
  }
  for (const auto& r : o.references) {
    as_usage([&] { reference_trend(r); });
    spec.overlays.push_back(ReferenceOverlay{r});
  }

  const Dataset data = filter_records(load_converters(o, err), parse_predicate(o.filters));
  if (o.fit) {
    if (spec.x_key != "year" && spec.x_key != "tech_nm") throw UsageError("--fit needs --x year or tech_nm");
    const SubsetFit f = fit_on_subset(data, spec.y_key, parse_axis(spec.x_key), Selector::all, spec.osr);
    spec.overlays.push_back(FittedOverlay{f.fit, "fit"});
  }
  const SeriesFile series = emit_series(data, spec);
  sink.add("csv", "series.csv", to_csv(series));
  sink.add("svg", "plot.svg", emit_scatter_svg(series, spec));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ADC survey analytics: metrics, budgets, frontiers, trends and gap reports", "adcgap"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--data", o.data, "converter survey CSV");
  app.add_option("--transceivers", o.transceivers, "transceiver survey CSV");
  app.add_option("--config", o.config, "key = value configuration file");
  app.add_option("--out", o.out, "directory for output files");
  app.add_option("--format", o.format, "stdout format when --out is not given")
      ->check(CLI::IsMember({"csv", "svg", "text"}));
  app.add_option("--osr", o.osr, "oversampling ratio (default: config analysis.osr or 1)");

  auto* ingest = app.add_subcommand("ingest", "validate and normalize survey CSV files");
  auto* metrics = app.add_subcommand("metrics", "derived metrics per record");
  auto* budget = app.add_subcommand("budget", "platform-to-converter budget cascade");

  auto* frontier = app.add_subcommand("frontier", "Pareto frontier or yearly-best envelope");
  frontier->add_option("--objective", o.objectives, "metric[:min|max], repeatable");
  frontier->add_option("--envelope", o.envelope, "metric for a yearly-best envelope");
  frontier->add_option("--direction", o.direction, "min or max for --envelope");
  frontier->add_option("--filter", o.filters, "eligibility condition, e.g. enob<=4");

  auto* trend = app.add_subcommand("trend", "fit a doubling trend or technology power law");
  trend->add_option("--metric", o.metric, "metric key, e.g. ebit");
  trend->add_option("--axis", o.axis, "year or tech_nm");
  trend->add_option("--selector", o.selector, "all, frontier or yearly_best");
  trend->add_option("--direction", o.direction, "min or max (default: metric's preferred)");
  trend->add_option("--threshold", o.threshold, "project the year this value is reached");
  trend->add_option("--anchor-year", o.anchor_year, "projection anchor year");
  trend->add_option("--anchor-value", o.anchor_value, "projection anchor value");
  trend->add_option("--reference", o.references, "reference tendency overlay, repeatable");
  trend->add_option("--filter", o.filters, "record condition, repeatable");

  auto* gap = app.add_subcommand("gap", "judge records against a requirement set");
  gap->add_option("--spec", o.spec, "table2-adc, table2-adc-1bit or table1-scenario");
  gap->add_flag("--project", o.project, "project feasibility years from yearly-best trends");
  gap->add_option("--energy-halving", o.energy_halving, "use this energy halving time (years)");

  auto* plot = app.add_subcommand("plot", "scatter plot with overlays");
  plot->add_option("--x", o.x_key, "x metric key");
  plot->add_option("--y", o.y_key, "y metric key");
  plot->add_option("--xscale", o.x_scale, "linear or log10");
  plot->add_option("--yscale", o.y_scale, "linear or log10");
  plot->add_option("--split", o.split, "condition such as enob<=4, or 'architecture'");
  plot->add_option("--jitter", o.jitters, "aperture jitter bound in seconds, repeatable");
  plot->add_option("--box", o.boxes, "requirement preset drawn as a box, repeatable");
  plot->add_option("--reference", o.references, "reference tendency overlay, repeatable");
  plot->add_flag("--fit", o.fit, "overlay a fit of y against year or tech_nm");
  plot->add_option("--title", o.title, "plot title");
  plot->add_option("--filter", o.filters, "record condition, repeatable");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Sink sink(o, out);
  try {
    if (ingest->parsed()) cmd_ingest(o, sink);
    else if (metrics->parsed()) cmd_metrics(o, sink, err);
    else if (budget->parsed()) cmd_budget(o, sink, err);
    else if (frontier->parsed()) cmd_frontier(o, sink, err);
    else if (trend->parsed()) cmd_trend(o, sink, err);
    else if (gap->parsed()) cmd_gap(o, sink, err);
    else if (plot->parsed()) cmd_plot(o, sink, err);
    sink.flush();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace adcgap
