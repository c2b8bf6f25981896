#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coapprox/vec.hpp"

namespace coapprox {

// Batch job description. Parsed from UTF-8 JSON configuration files; the
// exact grammar with defaults is printed by schema_dump() and pinned by the
// golden round-trip test.
struct SpaceConfig {
  std::string kind = "linf";  // l1 | l2 | lp | linf
  double p = 0.0;             // for lp; infinity is spelled "inf" in files
  bool p_is_inf = false;
  std::size_t dim = 2;
};

struct HalfSpaceConfig {
  Vec f;
  double level = 0.0;
  std::optional<Vec> y;  // omitted = derive via the norm-one projection search
};

struct BodyConfig {
  std::string kind;  // vertices | ball | halfspaces
  std::vector<Vec> points;
  double inner_radius = 0.0;
  SpaceConfig ball_space;
  Vec center;
  double radius = 1.0;
  std::vector<HalfSpaceConfig> faces;
  double outer_radius = 0.0;
};

struct DecomposeConfig {
  std::size_t count = 4;
  std::string sampler = "lowdisc";  // lowdisc | equiangular | axes
};

struct VerifyConfig {
  std::string kind = "counterexample_linf4";
  // counterexample_linf4 | halfspace_certification | intersection_membership
  // | nonconvex_linf2
  double h = 0.05;
  double R = 10.0;
  std::string golden;  // optional golden file to compare against
};

struct SweepConfig {
  std::string map = "nonconvex_linf2";  // nonconvex_linf2 | halfspace_projection | identity
  std::size_t pairs = 100000;
  double half_width = 2.0;
};

struct IterationSettings {
  std::size_t max_iter = 10000;
  double tol = 1e-8;
  double relaxation = 0.5;
};

struct JobConfig {
  std::string operation = "verify";
  // gauge | decompose | project | verify | counterexample | sweep
  SpaceConfig space;
  std::optional<BodyConfig> body;
  std::vector<HalfSpaceConfig> halfspaces;
  std::vector<Vec> query_points;
  std::string weights = "default";  // "default" = 2^-k renormalized
  std::vector<double> weight_values;
  DecomposeConfig decompose;
  VerifyConfig verify;
  SweepConfig sweep;
  IterationSettings iteration;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  std::string out = "coapprox_report.csv";
};

// Throws ConfigError with a line/field diagnostic on malformed input.
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);

std::string dump_config(const JobConfig& cfg);  // stable key order

// Full configuration grammar with defaults, including the defaults block
// that round-trips through parse_config.
std::string schema_dump();

}  // namespace coapprox
