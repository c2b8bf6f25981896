#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coapprox/config.hpp"
#include "coapprox/errors.hpp"
#include "coapprox/job.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> n;
  std::optional<double> tol;
};

void attach_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
  auto* c = cmd->add_option("--config", flags.config, "configuration file (JSON)");
  if (config_required) c->required();
  cmd->add_option("--seed", flags.seed, "override the configured seed");
  cmd->add_option("--out", flags.out, "override the report path");
  cmd->add_option("--n", flags.n, "override the decompose count / sweep pairs");
  cmd->add_option("--tol", flags.tol, "override the tolerance");
}

int execute(const std::string& operation, const CommonFlags& flags) {
  coapprox::JobConfig cfg;
  if (!flags.config.empty()) cfg = coapprox::load_config(flags.config);
  cfg.operation = operation;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.out) cfg.out = *flags.out;
  if (flags.tol) cfg.tol = *flags.tol;
  if (flags.n) {
    cfg.decompose.count = *flags.n;
    cfg.sweep.pairs = *flags.n;
  }
  const coapprox::RunResult res = coapprox::run_job(cfg);
  std::fputs(res.summary.c_str(), stdout);
  std::printf("report: %s\n", res.csv_path.c_str());
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coapprox: contractive projections, gauges and coapproximation oracles"};
  app.require_subcommand(1);

  CommonFlags flags;
  const char* ops[] = {"gauge", "decompose", "project", "verify", "sweep"};
  for (const char* op : ops) {
    auto* cmd = app.add_subcommand(op, std::string("run the ") + op + " pipeline");
    attach_common(cmd, flags, true);
  }
  // counterexample runs with built-in defaults, config optional
  attach_common(app.add_subcommand(
                    "counterexample",
                    "reproduce the l_inf^4 two-kernel counterexample with its control"),
                flags, false);
  app.add_subcommand("schema", "print the configuration grammar with defaults");

  CLI11_PARSE(app, argc, argv);
  const std::string op = app.get_subcommands().front()->get_name();

  if (op == "schema") {
    std::fputs(coapprox::schema_dump().c_str(), stdout);
    return 0;
  }
  try {
    return execute(op, flags);
  } catch (const coapprox::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const coapprox::CertificationFailure& e) {
    std::fprintf(stderr, "certification failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
