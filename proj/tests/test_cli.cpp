#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#ifndef _WIN32
#include <sys/wait.h>
#include <unistd.h>
#endif

#include <json.hpp>

#include "ellip/cli.hpp"
#include "ellip/errors.hpp"

using namespace ellip;
using nlohmann::json;

namespace {

const char* kMinimalConfig = R"({
  "tau": 0.5,
  "boundary": {"type": "modes", "modes": {"2": [1.0, 0.0], "-1": [0.0, 0.5]}}
})";

void expect_config_error(const std::string& text, const std::string& field) {
  try {
    parse_solve_config(text);
    FAIL("expected ConfigError for field ", field, " on: ", text);
  } catch (const ConfigError& e) {
    CHECK(e.field == field);
  }
}

json patched(const std::string& key, const json& value) {
  json cfg = json::parse(kMinimalConfig);
  cfg[key] = value;
  return cfg;
}

std::string temp_path(const std::string& name) {
#ifdef _WIN32
  return name;
#else
  return "/tmp/ellip_test_" + std::to_string(::getpid()) + "_" + name;
#endif
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(bool(f));
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(bool(f));
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(ELLIP_CLI_PATH) + " " + args +
                          " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("config: defaults and a fully specified document") {
  const SolveConfig base = parse_solve_config(kMinimalConfig);
  CHECK(base.tau == 0.5);
  CHECK(base.tol == 1e-9);
  CHECK(base.n_max == 64);
  CHECK(base.grid.J == 64);
  CHECK(base.grid.M == 0);
  CHECK(base.grid.K_max == 32);
  CHECK(base.seed == 1);
  CHECK(base.alpha == 0.75);
  CHECK_FALSE(base.validate_against_exact);
  CHECK(base.map.coeffs.size() == 2);
  const auto& dm = std::get<DirectModes>(base.boundary);
  CHECK(dm.modes.modes.at(2) == Cx(1.0, 0.0));
  CHECK(dm.modes.modes.at(-1) == Cx(0.0, 0.5));

  const SolveConfig full = parse_solve_config(R"({
    "tau": 0.25, "tol": 1e-8, "n_max": 20, "seed": 9, "alpha": 0.5,
    "map": {"coeffs": [[0,0],[1,0],[0.3,0]]},
    "grid": {"J": 32, "M": 256, "K_max": 24},
    "boundary": {"type": "exact_trace", "g": [[0,0],[1,0]], "h": [[0.5,0]]},
    "validate_against": "exact",
    "output": {"report_json": "r.json", "solution_csv": "s.csv"}
  })");
  CHECK(full.grid.M == 256);
  CHECK(full.validate_against_exact);
  const auto& tr = std::get<ExactTrace>(full.boundary);
  CHECK(tr.tau == 0.25);
  CHECK(tr.g.size() == 2);
  CHECK(tr.h.size() == 1);
  CHECK(full.output.report_json == "r.json");
  CHECK(full.output.mapped_csv.empty());
}

TEST_CASE("config: every invariant names its field") {
  expect_config_error("{\"boundary\": {\"type\": \"modes\", \"modes\": {}}}",
                      "tau");
  expect_config_error(patched("tau", 1.0).dump(), "tau");
  expect_config_error(patched("tau", -0.1).dump(), "tau");
  expect_config_error(patched("tol", 0.0).dump(), "tol");
  expect_config_error(patched("n_max", -1).dump(), "n_max");
  expect_config_error(patched("alpha", 1.5).dump(), "alpha");
  expect_config_error(patched("grid", json{{"J", 8}}).dump(), "grid.J");
  expect_config_error(patched("grid", json{{"M", 48}}).dump(), "grid.M");
  expect_config_error(
      patched("grid", json{{"M", 64}, {"K_max", 32}}).dump(), "grid.M");
  expect_config_error(patched("grid", json{{"K_max", 0}}).dump(),
                      "grid.K_max");
  expect_config_error(patched("map", json{{"coeffs", json::array()}}).dump(),
                      "map.coeffs");
  expect_config_error(patched("validate_against", "exact").dump(),
                      "validate_against");
  expect_config_error("{\"tau\": 0.5}", "boundary");
  expect_config_error(patched("boundary", json{{"type", "nope"}}).dump(),
                      "boundary.type");
  expect_config_error(
      patched("boundary",
              json{{"type", "modes"}, {"modes", json{{"x", {1, 0}}}}})
          .dump(),
      "boundary.modes");
  expect_config_error("not json at all", "(root)");
}

TEST_CASE("classify command emits machine-readable JSON") {
  std::ostringstream out, err;
  CHECK(cmd_classify(Cx(1.0), Cx(0.0), Cx(1.0), out, err) == 0);
  const json j = json::parse(out.str());
  CHECK(j["elliptic"] == true);
  CHECK(j["strongly_elliptic"] == true);
  CHECK(j["roots"].size() == 2);
  CHECK(j["reversed"] == false);

  std::ostringstream out2, err2;
  CHECK(cmd_classify(Cx(1.0), Cx(0.0), Cx(-1.0), out2, err2) == 0);
  const json j2 = json::parse(out2.str());
  CHECK(j2["inconclusive"] == true);
  CHECK_FALSE(j2.contains("elliptic"));

  std::ostringstream out3, err3;
  CHECK(cmd_classify(Cx(0.0), Cx(1.0), Cx(0.0), out3, err3) == 1);
}

TEST_CASE("solve command is deterministic up to timings") {
  const std::string cfg_path = temp_path("det.json");
  const std::string rep_a = temp_path("rep_a.json");
  const std::string rep_b = temp_path("rep_b.json");
  json cfg = json::parse(R"({
    "tau": 0.4, "tol": 1e-8, "seed": 12,
    "map": {"coeffs": [[0,0],[1,0],[0.2,0]]},
    "grid": {"J": 24, "K_max": 8},
    "boundary": {"type": "modes",
                 "modes": {"1": [1.0,0.0], "3": [0.0,0.4], "-2": [0.3,0.0]}}
  })");
  cfg["output"] = {{"report_json", rep_a}};
  write_file(cfg_path, cfg.dump());
  REQUIRE(run_binary("solve --config " + cfg_path) == 0);
  cfg["output"] = {{"report_json", rep_b}};
  write_file(cfg_path, cfg.dump());
  REQUIRE(run_binary("solve --config " + cfg_path) == 0);

  json a = json::parse(read_file(rep_a));
  json b = json::parse(read_file(rep_b));
  CHECK(a.contains("timings"));
  a.erase("timings");
  b.erase("timings");
  CHECK(a.dump() == b.dump());
  CHECK(a["status"] == "converged");
  CHECK(a["grid"]["M"] >= 32);
  std::remove(cfg_path.c_str());
  std::remove(rep_a.c_str());
  std::remove(rep_b.c_str());
}

TEST_CASE("solve command exit codes") {
  // non-univalent map -> 3
  const std::string cfg_path = temp_path("bad_map.json");
  json cfg = json::parse(kMinimalConfig);
  cfg["map"] = {{"coeffs", {{0.0, 0.0}, {1.0, 0.0}, {0.6, 0.0}}}};
  write_file(cfg_path, cfg.dump());
  CHECK(run_binary("solve --config " + cfg_path) == 3);

  // invalid config -> 1
  write_file(cfg_path, "{\"tau\": 2.0}");
  CHECK(run_binary("solve --config " + cfg_path) == 1);

  // missing file -> 1
  CHECK(run_binary("solve --config " + cfg_path + ".nope") == 1);

  // unknown subcommand -> 1
  CHECK(run_binary("frobnicate") == 1);
  std::remove(cfg_path.c_str());
}

TEST_CASE("solve command writes solution CSV on request") {
  const std::string cfg_path = temp_path("csv.json");
  const std::string csv_path = temp_path("sol.csv");
  json cfg = json::parse(kMinimalConfig);
  cfg["grid"] = {{"J", 16}, {"K_max", 4}};
  cfg["output"] = {{"solution_csv", csv_path}};
  write_file(cfg_path, cfg.dump());
  REQUIRE(run_binary("solve --config " + cfg_path) == 0);
  std::istringstream csv(read_file(csv_path));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "r,theta,re,im");
  int rows = 0;
  for (std::string line; std::getline(csv, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 17 * 16);  // (J+1) radii x M angles, M = 4 * K_max
  std::remove(cfg_path.c_str());
  std::remove(csv_path.c_str());
}

TEST_CASE("bench command produces well-formed CSV") {
  std::ostringstream out, err;
  const int rc = cmd_bench({32}, temp_path("bench.csv"), out, err);
  CHECK(rc == 0);
  std::istringstream csv(read_file(temp_path("bench.csv")));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "op,J,Kmax,seconds");
  int rows = 0;
  bool saw_run = false;
  for (std::string line; std::getline(csv, line);) {
    if (line.empty()) continue;
    ++rows;
    saw_run = saw_run || line.rfind("run,32,16,", 0) == 0;
    CHECK(line.find(",32,16,") != std::string::npos);
  }
  CHECK(rows == 4);
  CHECK(saw_run);
  std::remove(temp_path("bench.csv").c_str());
}
