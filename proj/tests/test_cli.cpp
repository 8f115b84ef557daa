#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "adcgap/cli.hpp"

using namespace adcgap;
namespace fs = std::filesystem;

namespace {

const std::string kData = std::string(ADCGAP_DATA_DIR) + "/sample_converters.csv";
const std::string kTx = std::string(ADCGAP_DATA_DIR) + "/sample_transceivers.csv";
const std::string kCfg = std::string(ADCGAP_DATA_DIR) + "/default.cfg";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("adcgap_test_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"metrics", "--format", "pdf", "--data", kData}).code == kExitUsage);
  CHECK(run({"metrics"}).code == kExitUsage);
  CHECK(run({"trend", "--data", kData}).code == kExitUsage);
  CHECK(run({"trend", "--data", kData, "--metric", "speed"}).code == kExitUsage);
  CHECK(run({"frontier", "--data", kData, "--objective", "ebit:sideways"}).code == kExitUsage);
  CHECK(run({"gap", "--data", kData, "--spec", "table9"}).code == kExitUsage);
  CHECK(run({"metrics", "--data", kData, "--osr", "0.5"}).code == kExitUsage);
  const Run r = run({"plot", "--data", kData, "--x", "fs_hz"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--y") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("frontier") != std::string::npos);
}

TEST_CASE("data errors exit 2") {
  CHECK(run({"metrics", "--data", "/nonexistent.csv"}).code == kExitData);
  CHECK(run({"budget", "--config", "/nonexistent.cfg"}).code == kExitData);
  const fs::path dir = scratch("bad");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.csv") << "id,year\n";
  CHECK(run({"metrics", "--data", (dir / "bad.csv").string()}).code == kExitData);
  // osr beyond the requirement allowance
  CHECK(run({"gap", "--data", kData, "--osr", "8"}).code == kExitData);
}

TEST_CASE("global options may follow the subcommand") {
  const Run a = run({"--data", kData, "--format", "csv", "metrics"});
  const Run b = run({"metrics", "--data", kData, "--format", "csv"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("id,year,", 0) == 0);
}

TEST_CASE("budget text") {
  const Run r = run({"budget", "--config", kCfg, "--data", kData, "--transceivers", kTx});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0.35 W") != std::string::npos);
  CHECK(r.out.find("ratio:") != std::string::npos);
}

TEST_CASE("every subcommand writes its artifacts") {
  const fs::path dir = scratch("all");
  const std::string out = dir.string();
  CHECK(run({"ingest", "--data", kData, "--transceivers", kTx, "--out", out}).code == 0);
  CHECK(run({"metrics", "--data", kData, "--out", out}).code == 0);
  CHECK(run({"budget", "--config", kCfg, "--out", out}).code == 0);
  CHECK(run({"frontier", "--data", kData, "--objective", "ebit:min", "--objective", "fs_hz", "--out", out}).code == 0);
  CHECK(run({"frontier", "--data", kData, "--envelope", "ebit", "--filter", "enob<=4", "--out", out}).code == 0);
  CHECK(run({"trend", "--data", kData, "--metric", "ebit", "--threshold", "1e-13", "--reference", "ebit-1.8yr",
             "--out", out})
            .code == 0);
  CHECK(run({"gap", "--data", kData, "--project", "--out", out}).code == 0);
  CHECK(run({"plot", "--data", kData, "--x", "bandwidth_hz", "--y", "enob", "--yscale", "linear", "--jitter",
             "1e-13", "--box", "table2-adc", "--split", "enob<=4", "--out", out})
            .code == 0);
  for (const char* name : {"converters.csv", "transceivers.csv", "metrics.csv", "budget.txt", "budget.csv",
                           "frontier.csv", "envelope.csv", "envelope.svg", "trend.txt", "trend_points.csv",
                           "trend.svg", "gap_report.txt", "gap_verdicts.csv", "series.csv", "plot.svg"})
    CHECK_MESSAGE(fs::exists(dir / name), name);
  CHECK(slurp(dir / "gap_report.txt").find("feasibility") != std::string::npos);
  CHECK(slurp(dir / "trend.txt").find("threshold") != std::string::npos);
}

TEST_CASE("ingest output re-ingests to the same table") {
  const fs::path a = scratch("ingest_a"), b = scratch("ingest_b");
  REQUIRE(run({"ingest", "--data", kData, "--out", a.string()}).code == 0);
  REQUIRE(run({"ingest", "--data", (a / "converters.csv").string(), "--out", b.string()}).code == 0);
  CHECK(slurp(a / "converters.csv") == slurp(b / "converters.csv"));
}

TEST_CASE("scenario screening") {
  const Run r = run({"gap", "--spec", "table1-scenario", "--transceivers", kTx, "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("t1,") != std::string::npos);
  CHECK(run({"gap", "--spec", "table1-scenario"}).code == kExitUsage);
}

TEST_CASE("requirement from config") {
  const fs::path dir = scratch("req");
  fs::create_directories(dir);
  std::ofstream(dir / "req.cfg") << "requirement.name = relaxed\nrequirement.max_energy_per_bit_j = 1e-10\n"
                                    "requirement.max_area_mm2 = 1\nrequirement.min_bandwidth_hz = 1e9\n";
  const Run r = run({"gap", "--data", kData, "--config", (dir / "req.cfg").string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("relaxed") != std::string::npos);
  CHECK(r.out.find("overall pass: 0") == std::string::npos);
}
