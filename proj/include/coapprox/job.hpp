#pragma once

#include <string>

#include "coapprox/config.hpp"

namespace coapprox {

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 validation, 3 certification failure, 4 max-iter
  std::string csv_path;
  std::string summary;
};

// Executes the configured pipeline, writing the CSV report to cfg.out and a
// plain-text summary next to it. Validation problems throw ConfigError; the
// caller maps that to exit code 2.
RunResult run_job(const JobConfig& cfg);

}  // namespace coapprox
