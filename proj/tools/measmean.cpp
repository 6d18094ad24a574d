// measmean: generalized means by measure on finite unions of intervals.

#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "measmean/catalog.hpp"
#include "measmean/commands.hpp"
#include "measmean/errors.hpp"
#include "measmean/report.hpp"
#include "measmean/suites.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kNumeric = 3;

int fail(int code, const std::string& what) {
  std::cerr << "measmean: error: " << what << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace measmean;

  CLI::App app{"Generalized means by measure on finite unions of intervals"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string window;
  std::string shifts;
  std::string out_path;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the report to this file");
  };
  auto add_window = [&](CLI::App* sub, bool required, const char* help) {
    auto* opt = sub->add_option("--window", window, help);
    if (required) opt->required();
  };
  auto add_build = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Tabulation tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--points", cfg.points, "Grid points per branch")
        ->check(CLI::Range(8, 1 << 20));
    sub->add_option("--calibration", cfg.calibration,
                    "Left-branch calibration")
        ->check(CLI::IsMember({"density_limit", "probe_pair"}));
  };

  auto* mean_cmd = app.add_subcommand("mean", "Evaluate M^mu(H)");
  mean_cmd->add_option("--measure", cfg.measure,
                       "Catalog measure or built:<mean>")
      ->required();
  mean_cmd->add_option("--set", cfg.set, "Set expression")->required();
  add_window(mean_cmd, false, "Construction window lo,hi for built: measures");
  add_build(mean_cmd);
  add_out(mean_cmd);

  auto* construct_cmd =
      app.add_subcommand("construct", "Synthesize the measure of a mean");
  construct_cmd
      ->add_option("--mean", cfg.mean,
                   "arithmetic, geometric, harmonic, logarithmic or power:p")
      ->required();
  add_window(construct_cmd, false, "Construction window lo,hi");
  add_build(construct_cmd);
  add_out(construct_cmd);

  auto* compare_cmd =
      app.add_subcommand("compare", "Certify M^mu(H) <= M^nu(H) on a window");
  compare_cmd->add_option("--mu", cfg.mu, "Measure mu")->required();
  compare_cmd->add_option("--nu", cfg.nu, "Measure nu")->required();
  add_window(compare_cmd, true, "Window lo,hi");
  compare_cmd->add_option("--n-probe", cfg.n_probe, "Random intervals")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--n-random", cfg.n_random, "Random unions")
      ->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--seed", cfg.seed, "Random seed");
  add_out(compare_cmd);

  auto* sweep_cmd =
      app.add_subcommand("sweep", "M^mu(H+x) against Avg(H+x) along shifts");
  sweep_cmd->add_option("--measure", cfg.measure, "Measure")->required();
  sweep_cmd->add_option("--set", cfg.set, "Set expression")->required();
  sweep_cmd->add_option("--shifts", shifts, "Comma separated shifts")
      ->required();
  sweep_cmd->add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_window(sweep_cmd, false, "Construction window lo,hi for built: measures");
  add_out(sweep_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", cfg.suites, "Suite name (repeatable)")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--cases", cfg.cases, "Random cases per suite")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", cfg.seed, "Random seed");
  add_out(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (!window.empty()) {
      const auto [lo, hi] = parse_window(window);
      cfg.window_lo = lo;
      cfg.window_hi = hi;
    }
    if (!shifts.empty()) cfg.shifts = parse_list(shifts);

    CommandResult result;
    if (*mean_cmd) {
      result = cmd_mean(cfg);
    } else if (*construct_cmd) {
      result = cmd_construct(cfg);
    } else if (*compare_cmd) {
      result = cmd_compare(cfg);
    } else if (*sweep_cmd) {
      result = cmd_sweep(cfg);
    } else {
      result = cmd_verify(cfg);
    }
    emit(result.output, out_path.empty() ? std::nullopt
                                         : std::optional<std::string>(out_path));
    return result.exit_code;
  } catch (const ParseError& e) {
    return fail(kUsage, e.what());
  } catch (const InvalidInterval& e) {
    return fail(kUsage, e.what());
  } catch (const UnknownMeasure& e) {
    return fail(kUsage, e.what());
  } catch (const UnknownMean& e) {
    return fail(kUsage, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kUsage, e.what());
  } catch (const std::exception& e) {
    return fail(kNumeric, e.what());
  }
}
