#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "coapprox/config.hpp"
#include "coapprox/errors.hpp"
#include "coapprox/job.hpp"

using namespace coapprox;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string tmp_path(const char* name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("defaults round-trip through dump and parse") {
  const JobConfig defaults;
  const std::string once = dump_config(defaults);
  const JobConfig reparsed = parse_config(once);
  CHECK(dump_config(reparsed) == once);

  // the schema embeds the same defaults block
  const std::string schema = schema_dump();
  CHECK(schema.find(once) != std::string::npos);
  CHECK(schema.find("2^-k renormalized") != std::string::npos);
  CHECK(schema.find("\"inf\"") != std::string::npos);
}

TEST_CASE("parse diagnostics carry line and field information") {
  try {
    parse_config("{\n  \"operation\": \"gauge\",\n  oops\n}");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_config("{\"operation\": \"fly\"}");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("operation") != std::string::npos);
  }
  try {
    parse_config("{\"space\": {\"kind\": \"lp\", \"p\": 0.5, \"dim\": 2}}");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("space.p") != std::string::npos);
  }
  CHECK_THROWS_AS(load_config("does_not_exist.cfg"), ConfigError);
}

TEST_CASE("box decomposition job recovers the box") {
  JobConfig cfg = parse_config(R"({
    "operation": "decompose",
    "space": {"kind": "linf", "dim": 2},
    "body": {"kind": "vertices",
             "points": [[-1,-1],[1,-1],[1,1],[-1,1]],
             "inner_radius": 1.0},
    "decompose": {"count": 4, "sampler": "axes"}
  })");
  cfg.out = tmp_path("box.csv");
  const RunResult res = run_job(cfg);
  CHECK(res.exit_code == 0);
  const std::string csv = slurp(cfg.out);
  CHECK(csv.rfind("coapprox-report v1\n", 0) == 0);
  CHECK(csv.find("index,f,level,hausdorff,seed") != std::string::npos);
  // 4 face rows with hausdorff estimate 0
  int rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == 2 + 4);
  CHECK(res.summary.find("4 half-spaces") != std::string::npos);

  // determinism: identical config and seed give byte-identical reports
  JobConfig again = cfg;
  again.out = tmp_path("box2.csv");
  run_job(again);
  CHECK(slurp(cfg.out) == slurp(again.out));
  std::remove(cfg.out.c_str());
  std::remove(again.out.c_str());
}

TEST_CASE("projection job exit codes") {
  JobConfig cfg = parse_config(R"({
    "operation": "project",
    "space": {"kind": "linf", "dim": 3},
    "halfspaces": [{"f": [1, 0, 0], "level": 0.0},
                   {"f": [0.5, 0.25, 0.25], "level": 0.0}],
    "query_points": [[1, 1, 1]]
  })");
  cfg.out = tmp_path("proj.csv");
  CHECK(run_job(cfg).exit_code == 0);

  // starving the iteration signals exit code 4
  cfg.iteration.max_iter = 1;
  cfg.iteration.tol = 1e-14;
  cfg.query_points = {{1e5, -2e5, 3e5}};
  CHECK(run_job(cfg).exit_code == 4);
  std::remove(cfg.out.c_str());
  std::remove((cfg.out + ".summary.txt").c_str());
}

TEST_CASE("certification failure gives exit code 3") {
  JobConfig cfg = parse_config(R"({
    "operation": "verify",
    "verify": {"kind": "halfspace_certification"},
    "space": {"kind": "linf", "dim": 4},
    "halfspaces": [{"f": [0.25, 0.25, 0.25, 0.25], "level": 0.0}]
  })");
  cfg.out = tmp_path("cert.csv");
  const RunResult res = run_job(cfg);
  CHECK(res.exit_code == 3);
  CHECK(res.summary.find("NOT certified") != std::string::npos);
  std::remove(cfg.out.c_str());
  std::remove((cfg.out + ".summary.txt").c_str());
}

TEST_CASE("nonconvex verification bundle passes") {
  JobConfig cfg = parse_config(R"({
    "operation": "verify",
    "verify": {"kind": "nonconvex_linf2"},
    "space": {"kind": "linf", "dim": 2},
    "sweep": {"pairs": 20000}
  })");
  cfg.out = tmp_path("nonconvex.csv");
  const RunResult res = run_job(cfg);
  CHECK(res.exit_code == 0);
  CHECK(slurp(cfg.out).find("max_ratio,1,") != std::string::npos);
  std::remove(cfg.out.c_str());
  std::remove((cfg.out + ".summary.txt").c_str());
}

TEST_CASE("counterexample bundle at reduced resolution") {
  JobConfig cfg;
  cfg.operation = "counterexample";
  cfg.verify.h = 0.25;
  cfg.verify.R = 6.0;
  cfg.out = tmp_path("r1.csv");
  const RunResult res = run_job(cfg);
  CHECK(res.exit_code == 0);
  const std::string csv = slurp(cfg.out);
  CHECK(csv.find("witness,") != std::string::npos);
  CHECK(csv.find("control,") != std::string::npos);
  CHECK(res.summary.find("certified margin") != std::string::npos);
  std::remove(cfg.out.c_str());
  std::remove((cfg.out + ".summary.txt").c_str());
}

TEST_CASE("missing inputs are validation errors") {
  JobConfig cfg;
  cfg.operation = "gauge";
  CHECK_THROWS_AS(run_job(cfg), ConfigError);
  cfg.operation = "project";
  CHECK_THROWS_AS(run_job(cfg), ConfigError);
}
