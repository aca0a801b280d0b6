// lspsim: discrete-event simulator for bidirectional LSP-pair selection.
//
// Subcommands:
//   run <scenario.json>      run one scenario file
//   figure <id>              run a built-in experiment preset
//   sweep <scenario.json>    re-run a scenario over a grid of one field
//   plotdata <results.csv>   regroup a result table for gnuplot
//
// Exit codes: 0 success, 2 validation error, 3 runtime error, 4 bisection
// bracketing failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lspsim/driver.hpp"
#include "lspsim/errors.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitBracketing = 4;

struct CommonArgs {
  std::uint64_t seed = 0;
  bool seed_set = false;
  int replications = 0;
  bool replications_set = false;
  std::string out_path;
  int jobs = 1;
};

lspsim::DriverOptions driver_options(const CommonArgs& args) {
  lspsim::DriverOptions options;
  if (args.seed_set) options.seed = args.seed;
  if (args.replications_set) options.replications = args.replications;
  options.jobs = args.jobs;
  return options;
}

// Writes to --out when given (plus a one-line summary on stdout), otherwise
// prints the payload itself.
void deliver(const std::string& payload, const std::string& out_path,
             const std::string& what) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << payload) || !out.flush())
    throw lspsim::ValidationError("cannot write to '" + out_path + "'");
  std::cout << "wrote " << what << " to " << out_path << "\n";
}

void deliver_table(const lspsim::ResultTable& table,
                   const std::string& out_path) {
  deliver(lspsim::to_csv(table),
          out_path, std::to_string(table.rows.size()) + " result rows");
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--seed", args.seed,
                  "Master seed for replication streams")
      ->each([&args](const std::string&) { args.seed_set = true; });
  cmd->add_option("--replications", args.replications,
                  "Replications per point")
      ->check(CLI::PositiveNumber)
      ->each([&args](const std::string&) { args.replications_set = true; });
  cmd->add_option("--out", args.out_path, "Write results to this file");
  cmd->add_option("--jobs", args.jobs, "Worker threads for replications")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Discrete-event simulation of bidirectional LSP-pair selection "
      "policies"};
  app.require_subcommand(1);

  CommonArgs args;

  std::string scenario_path;
  CLI::App* cmd_run = app.add_subcommand("run", "Run one scenario file");
  cmd_run->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();
  add_common(cmd_run, args);

  std::string figure_id;
  double rate_override = 0.0;
  std::int64_t total_override = 0;
  std::int64_t warmup_override = 0;
  CLI::App* cmd_figure =
      app.add_subcommand("figure", "Run a built-in experiment preset");
  cmd_figure->add_option("id", figure_id, "Figure id (run with an unknown id to list)")
      ->required();
  CLI::Option* opt_rate = cmd_figure->add_option(
      "--rate", rate_override, "Mean inter-arrival time override");
  CLI::Option* opt_total =
      cmd_figure
          ->add_option("--total-requests", total_override,
                       "Requests per replication")
          ->check(CLI::PositiveNumber);
  CLI::Option* opt_warmup =
      cmd_figure
          ->add_option("--warmup-requests", warmup_override,
                       "Requests discarded before measuring")
          ->check(CLI::NonNegativeNumber);
  add_common(cmd_figure, args);

  std::string sweep_path;
  std::string sweep_param;
  std::vector<double> sweep_values;
  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "Re-run a scenario over a grid of one numeric field");
  cmd_sweep->add_option("scenario", sweep_path, "Scenario JSON file")
      ->required();
  cmd_sweep
      ->add_option("--param", sweep_param,
                   "Dotted path of the field, e.g. traffic.mean_interarrival")
      ->required();
  cmd_sweep->add_option("--values", sweep_values, "Values, comma separated")
      ->required()
      ->delimiter(',');
  add_common(cmd_sweep, args);

  std::string table_path;
  CLI::App* cmd_plot = app.add_subcommand(
      "plotdata", "Regroup a result table into gnuplot blocks");
  cmd_plot->add_option("results", table_path, "Result table CSV file")
      ->required();
  cmd_plot->add_option("--out", args.out_path, "Write the layout here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitValidation;
  }

  try {
    const lspsim::DriverOptions options = driver_options(args);
    if (cmd_run->parsed()) {
      deliver_table(
          lspsim::run_scenario_config(lspsim::load_scenario_file(scenario_path),
                                      options),
          args.out_path);
    } else if (cmd_figure->parsed()) {
      lspsim::FigureOverrides figure_overrides;
      if (opt_rate->count() > 0) figure_overrides.rate = rate_override;
      if (opt_total->count() > 0)
        figure_overrides.total_requests = total_override;
      if (opt_warmup->count() > 0)
        figure_overrides.warmup_requests = warmup_override;
      deliver_table(
          lspsim::run_figure(lspsim::figure_preset(figure_id, figure_overrides),
                             options),
          args.out_path);
    } else if (cmd_sweep->parsed()) {
      deliver_table(
          lspsim::run_sweep(lspsim::read_text_file(sweep_path), sweep_path,
                            sweep_param, sweep_values, options),
          args.out_path);
    } else if (cmd_plot->parsed()) {
      deliver(lspsim::gnuplot_layout(
                  lspsim::parse_csv(lspsim::read_text_file(table_path))),
              args.out_path, "gnuplot blocks");
    }
    return 0;
  } catch (const lspsim::BracketingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBracketing;
  } catch (const lspsim::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
