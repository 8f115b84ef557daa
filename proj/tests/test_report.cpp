#include <doctest.h>

#include <set>
#include <sstream>

#include "adcgap/metrics.hpp"
#include "adcgap/report.hpp"

using namespace adcgap;
using doctest::Approx;

namespace {

const Dataset& sample() {
  static const Dataset d =
      parse_converter_csv(read_text_file(std::string(ADCGAP_DATA_DIR) + "/sample_converters.csv")).dataset;
  return d;
}

PlotSpec enob_vs_bandwidth() {
  PlotSpec s;
  s.title = "ENOB vs bandwidth";
  s.x_key = "bandwidth_hz";
  s.y_key = "enob";
  s.y_scale = Scale::linear;
  return s;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("series rows are complete and ordered") {
  PlotSpec spec = enob_vs_bandwidth();
  spec.split = SeriesSplit{SeriesSplit::Kind::predicate, {{parse_condition("enob<=4")}, false}};
  const SeriesFile f = emit_series(sample(), spec);
  const auto resolved = std::count_if(sample().records().begin(), sample().records().end(),
                                      [](const SurveyRecord& r) { return r.resolution_complete(); });
  CHECK(f.rows.size() == static_cast<std::size_t>(resolved));
  CHECK(std::none_of(f.rows.begin(), f.rows.end(), [](const SeriesRow& r) { return r.id == "kull14"; }));
  for (std::size_t i = 1; i < f.rows.size(); ++i) {
    const auto& a = f.rows[i - 1];
    const auto& b = f.rows[i];
    CHECK((a.label < b.label || (a.label == b.label && (a.year < b.year || (a.year == b.year && a.id < b.id)))));
  }
  std::set<std::string> labels;
  for (const auto& r : f.rows) labels.insert(r.label);
  CHECK(labels.size() == 2);

  const std::string csv = to_csv(f);
  CHECK(csv.rfind("# ", 0) == 0);
  CHECK(csv.find("\nx,y,id,year,label\n") != std::string::npos);
  CHECK(count(csv, "\n") == f.rows.size() + 2);
}

TEST_CASE("series csv values round-trip exactly") {
  const SeriesFile f = emit_series(sample(), enob_vs_bandwidth());
  std::istringstream in(to_csv(f));
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  for (const auto& row : f.rows) {
    std::getline(in, line);
    CHECK(std::stod(line.substr(0, line.find(','))) == row.x);
  }
}

TEST_CASE("svg document structure") {
  PlotSpec spec = enob_vs_bandwidth();
  spec.overlays.push_back(JitterBound{1e-13});
  spec.overlays.push_back(RequirementBox{requirement_preset("table2-adc")});
  const SeriesFile f = emit_series(sample(), spec);
  const std::string svg = emit_scatter_svg(f, spec);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("viewBox=") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("class=\"jitter\"") != std::string::npos);
  CHECK(svg.find("class=\"requirement\"") != std::string::npos);
  CHECK(svg.find("<desc>") != std::string::npos);
  CHECK(count(svg, "xu17") >= 1);
  CHECK(svg == emit_scatter_svg(f, spec));
}

TEST_CASE("log axes reject non-positive data") {
  PlotSpec spec;
  spec.x_key = "year";
  spec.y_key = "enob";
  spec.x_scale = Scale::linear;
  SurveyRecord r{.id = "noisy", .year = 2000, .power = 1e-3, .sample_rate = 1e6, .sndr = 1.0};
  const Dataset d({r}, {});
  try {
    emit_scatter_svg(emit_series(d, spec), spec);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("noisy") != std::string::npos);
  }
}

TEST_CASE("requirement region on common axes") {
  const RequirementSpec s = requirement_preset("table2-adc");
  const auto box = requirement_region(s, "bandwidth_hz", "enob");
  REQUIRE(box);
  CHECK(box->x_low == 10e9);
  CHECK(box->y_low == 4.0);
  CHECK(std::isinf(box->x_high));
  const auto e = requirement_region(s, "area_mm2", "ebit");
  CHECK(e->x_high == 0.1);
  CHECK(e->y_high == 1e-12);
  CHECK(requirement_region(s, "fs_hz", "enob", 2.0)->x_low == 40e9);
  CHECK_FALSE(requirement_region(s, "year", "fom_s"));
}

TEST_CASE("jitter overlay samples the analytic bound") {
  PlotSpec spec = enob_vs_bandwidth();
  const Overlay o = JitterBound{1e-13};
  const auto curve = overlay_curve(o, spec, 1e8, 1e11, emit_series(sample(), spec));
  REQUIRE(curve.size() > 10);
  bool has_10ghz = false;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].second == Approx(jitter_enob_limit(curve[i].first, 1e-13)));
    if (i) CHECK(curve[i].second < curve[i - 1].second);
    if (curve[i].first == 1e10) {
      has_10ghz = true;
      CHECK(curve[i].second == Approx(7.02).epsilon(1e-3));
    }
  }
  CHECK(has_10ghz);
  spec.y_key = "ebit";
  CHECK(overlay_curve(o, spec, 1e8, 1e11, emit_series(sample(), spec)).empty());
}

TEST_CASE("text reports") {
  const BudgetCascade b = cascade(PlatformSpec{}, AllocationPolicy{});
  const std::string t = budget_text(PlatformSpec{}, AllocationPolicy{}, b);
  CHECK(t.find("0.75 mm2") != std::string::npos);
  CHECK(t.find("3.5 pJ/bit") != std::string::npos);
  CHECK(t.find("100 Gb/s") != std::string::npos);

  const GapReport g = gap_report(sample(), requirement_preset("table2-adc"));
  const std::string gt = gap_text(g);
  CHECK(gt.find("overall pass: 0") != std::string::npos);
  CHECK(gt.find("nearest miss: xu17") != std::string::npos);
  const std::string vc = verdicts_csv(g);
  CHECK(count(vc, "\n") == g.verdicts.size() + 1);
}

TEST_CASE("display formatting") {
  CHECK(format_sig(1.91666666e-12) == "1.917e-12");
  CHECK(format_display(1.91666666e-12, "ebit") == "1.917 pJ/bit");
  CHECK(format_display(24e9, "fs_hz") == "24 GHz");
}

TEST_CASE("hashing") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(dataset_hash(sample()) == dataset_hash(sample()));
  CHECK(dataset_hash(sample()).size() == 16);
}

TEST_CASE("metrics csv has one row per record") {
  const std::string m = metrics_csv(sample(), 1.0);
  CHECK(count(m, "\n") == sample().records().size() + 1);
  CHECK(m.find("xu17,2017,4,") != std::string::npos);
}
