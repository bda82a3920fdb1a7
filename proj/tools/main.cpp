#include <exception>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "log.hpp"
#include "run_config.hpp"

namespace {

using liefrenet::cli::ConfigError;
using liefrenet::cli::ConfigOverrides;
using liefrenet::cli::RunConfig;

struct SubcommandArgs {
  std::string config_path;
  ConfigOverrides overrides;
};

void add_common_flags(CLI::App& sub, SubcommandArgs& args) {
  sub.add_option("--config", args.config_path, "Run configuration file")
      ->required();
  sub.add_option("--out", args.overrides.out_dir, "Output directory");
  sub.add_option("--method", args.overrides.method,
                 "Integration method (rk4 | rk4_renorm)");
  sub.add_option("--seed", args.overrides.seed,
                 "Seed for randomized property checks");
}

int dispatch(int which, const SubcommandArgs& args) {
  const RunConfig cfg =
      liefrenet::cli::load_config(args.config_path, args.overrides);
  switch (which) {
    case 0:
      return liefrenet::cli::cmd_integrate(cfg);
    case 1:
      return liefrenet::cli::cmd_verify(cfg);
    default:
      return liefrenet::cli::cmd_bench(cfg);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frenet transport on 3D Lie groups: frame and spinor runs"};
  app.require_subcommand(1);

  SubcommandArgs integrate_args, verify_args, bench_args;
  CLI::App* integrate =
      app.add_subcommand("integrate", "Transport a frame or spinor and "
                                      "write per-sample CSV");
  add_common_flags(*integrate, integrate_args);
  CLI::App* verify =
      app.add_subcommand("verify", "Run the property battery and the "
                                   "two-transport equivalence");
  add_common_flags(*verify, verify_args);
  CLI::App* bench =
      app.add_subcommand("bench", "Compare the two transports on cost and "
                                  "accuracy");
  add_common_flags(*bench, bench_args);
  bench->add_option("--reps", bench_args.overrides.reps,
                    "Timing repetitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0 through CLI11; genuine parse
    // errors land on the config-validation exit code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (integrate->parsed()) return dispatch(0, integrate_args);
    if (verify->parsed()) return dispatch(1, verify_args);
    return dispatch(2, bench_args);
  } catch (const ConfigError& e) {
    liefrenet::cli::log_error(e.what());
    return 2;
  } catch (const std::domain_error& e) {
    liefrenet::cli::log_error(e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    liefrenet::cli::log_error(e.what());
    return 3;
  } catch (const std::exception& e) {
    liefrenet::cli::log_error(std::string("unexpected failure: ") + e.what());
    return 70;
  }
}
