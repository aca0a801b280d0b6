#include "lspsim/driver.hpp"

#include <cstdio>
#include <sstream>

#include "lspsim/errors.hpp"

namespace lspsim {

namespace {

struct Aggregate {
  LossEstimate loss;
  double deadlock_fraction = 0.0;
  std::int64_t offered = 0;
};

Aggregate aggregate_runs(const std::vector<RunResult>& results) {
  Aggregate agg;
  agg.loss = loss_probability(results);
  std::int64_t rejected = 0;
  std::int64_t deadlocked = 0;
  for (const RunResult& r : results) {
    agg.offered += r.offered;
    rejected += r.rejected;
    deadlocked += r.deadlock_rejected;
  }
  if (rejected > 0)
    agg.deadlock_fraction =
        static_cast<double>(deadlocked) / static_cast<double>(rejected);
  return agg;
}

ResultRow loss_row(const std::string& sweep_param, double sweep_value,
                   const Scenario& scenario, PolicyKind policy,
                   int replications, std::uint64_t master_seed, int jobs) {
  Scenario prepared = scenario;
  prepared.policy = policy;
  prepared.record_decisions = false;
  const Aggregate agg = aggregate_runs(
      run_replications(prepared, replications, master_seed, jobs));

  ResultRow row;
  row.sweep_param = sweep_param;
  row.sweep_value = sweep_value;
  row.policy = to_string(policy);
  row.mean_loss = agg.loss.mean_loss;
  row.ci_halfwidth = agg.loss.ci_halfwidth;
  row.deadlock_fraction = agg.deadlock_fraction;
  row.offered = agg.offered;
  row.replications = replications;
  return row;
}

}  // namespace

ResultTable run_scenario_config(const ScenarioConfig& config,
                                const DriverOptions& options) {
  const int replications =
      options.replications.value_or(config.replications);
  const std::uint64_t seed = options.seed.value_or(config.master_seed);
  ResultTable table;
  table.rows.push_back(loss_row("scenario", 0.0, config.scenario,
                                config.scenario.policy, replications, seed,
                                options.jobs));
  return table;
}

ResultTable run_figure(const FigurePreset& preset,
                       const DriverOptions& options) {
  const int replications =
      options.replications.value_or(preset.default_replications);
  const std::uint64_t seed = options.seed.value_or(0);

  ResultTable table;
  for (const FigurePoint& point : preset.points) {
    if (preset.kind == FigureKind::loss_sweep) {
      for (PolicyKind policy : preset.policies)
        table.rows.push_back(loss_row(preset.sweep_param, point.sweep_value,
                                      point.scenario, policy, replications,
                                      seed, options.jobs));
      continue;
    }

    ReductionOptions reduction;
    reduction.replications = replications;
    reduction.master_seed = seed;
    reduction.jobs = options.jobs;
    const ReductionEstimate estimate = equal_loss_reduction(
        point.scenario, preset.reference, preset.test, reduction);

    ResultRow row;
    row.sweep_param = preset.sweep_param;
    row.sweep_value = point.sweep_value;
    row.policy = preset.reduction_label;
    row.mean_loss = estimate.z_value;
    row.ci_halfwidth = 0.0;
    row.deadlock_fraction = 0.0;
    row.offered = 0;
    row.replications = replications;
    table.rows.push_back(row);
  }
  return table;
}

ResultTable run_sweep(const std::string& scenario_text,
                      const std::string& origin,
                      const std::string& dotted_path,
                      const std::vector<double>& values,
                      const DriverOptions& options) {
  check_input(!values.empty(), "sweep: no values given");
  ResultTable table;
  for (double value : values) {
    const ScenarioConfig config = parse_scenario_text_with_override(
        scenario_text, origin, dotted_path, value);
    const int replications =
        options.replications.value_or(config.replications);
    const std::uint64_t seed = options.seed.value_or(config.master_seed);
    table.rows.push_back(loss_row(dotted_path, value, config.scenario,
                                  config.scenario.policy, replications, seed,
                                  options.jobs));
  }
  return table;
}

std::string gnuplot_layout(const ResultTable& table) {
  std::vector<std::string> order;
  for (const ResultRow& row : table.rows) {
    bool seen = false;
    for (const std::string& policy : order)
      if (policy == row.policy) seen = true;
    if (!seen) order.push_back(row.policy);
  }

  std::ostringstream out;
  char buf[160];
  for (std::size_t b = 0; b < order.size(); ++b) {
    if (b > 0) out << "\n\n";
    out << "# block " << b << ": " << order[b] << '\n';
    out << "# sweep_value mean_loss ci_halfwidth deadlock_fraction\n";
    for (const ResultRow& row : table.rows) {
      if (row.policy != order[b]) continue;
      std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %.17g\n",
                    row.sweep_value, row.mean_loss, row.ci_halfwidth,
                    row.deadlock_fraction);
      out << buf;
    }
  }
  return out.str();
}

}  // namespace lspsim
