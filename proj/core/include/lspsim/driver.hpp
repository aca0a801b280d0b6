#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lspsim/metrics.hpp"
#include "lspsim/presets.hpp"
#include "lspsim/result_table.hpp"
#include "lspsim/scenario_io.hpp"

namespace lspsim {

/// Command-line toggles that take precedence over anything a scenario file
/// or preset carries.
struct DriverOptions {
  std::optional<std::uint64_t> seed;
  std::optional<int> replications;
  int jobs = 1;
};

/// One scenario, one policy, one row.
ResultTable run_scenario_config(const ScenarioConfig& config,
                                const DriverOptions& options);

/// A figure preset: loss sweeps yield one row per (point, policy), and
/// reduction sweeps one row per point whose policy column is the factor's
/// label and whose mean_loss column is the factor's value.
ResultTable run_figure(const FigurePreset& preset,
                       const DriverOptions& options);

/// Re-runs the scenario text once per value with the addressed field
/// replaced. The sweep_param column carries the dotted path.
ResultTable run_sweep(const std::string& scenario_text,
                      const std::string& origin,
                      const std::string& dotted_path,
                      const std::vector<double>& values,
                      const DriverOptions& options);

/// Result rows regrouped into gnuplot blocks: one index per policy, rows
/// "sweep_value mean_loss ci_halfwidth deadlock_fraction", blocks separated
/// by two blank lines.
std::string gnuplot_layout(const ResultTable& table);

}  // namespace lspsim
