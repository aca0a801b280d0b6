#include "lspsim/presets.hpp"

#include <algorithm>
#include <utility>

#include "lspsim/errors.hpp"

namespace lspsim {

namespace {

Topology two_pair_topology(double cap1, double cap2, double delay1 = 0.0,
                           double delay2 = 0.0) {
  Topology topology;
  topology.pairs.push_back({0, cap1, cap1, delay1});
  topology.pairs.push_back({1, cap2, cap2, delay2});
  return topology;
}

DemandPattern anti_phase_pattern(double large, double small) {
  DemandPattern pattern;
  pattern.entries.push_back({large, small});
  pattern.entries.push_back({small, large});
  return pattern;
}

Scenario base_scenario(Topology topology, DemandPattern pattern, double rate,
                       std::int64_t total, std::int64_t warmup) {
  Scenario scenario;
  scenario.topology = std::move(topology);
  scenario.pattern = std::move(pattern);
  scenario.arrivals.mean_interarrival = rate;
  scenario.arrivals.holding_time = kPresetHoldingTime;
  scenario.total_requests = total;
  scenario.warmup_requests = warmup;
  return scenario;
}

// Fixed-total sweeps reach corners where one pair has no capacity at all;
// such a pair can never carry traffic and breaks the key-direction ratios,
// so it is removed and the remaining pairs are renumbered.
Topology drop_dead_pairs(const Topology& topology) {
  Topology kept;
  for (const LspPairSpec& spec : topology.pairs) {
    if (spec.max_up <= 0.0 && spec.max_down <= 0.0) continue;
    LspPairSpec renumbered = spec;
    renumbered.pair_id = static_cast<int>(kept.pairs.size());
    kept.pairs.push_back(renumbered);
  }
  return kept;
}

struct Defaults {
  double rate;
  std::int64_t total;
  std::int64_t warmup;
};

Defaults resolve(const FigureOverrides& overrides, double preset_rate,
                 std::int64_t preset_total, std::int64_t preset_warmup) {
  Defaults d;
  d.rate = overrides.rate.value_or(preset_rate);
  d.total = overrides.total_requests.value_or(preset_total);
  d.warmup = overrides.warmup_requests.value_or(
      overrides.total_requests ? std::max<std::int64_t>(1000, d.total / 10)
                               : preset_warmup);
  check_input(d.rate > 0.0, "figure rate override must be > 0");
  return d;
}

FigurePreset symmetric_demand_sweep(const FigureOverrides& overrides) {
  FigurePreset preset;
  preset.id = "fig3-1";
  preset.sweep_param = "x";
  preset.policies = {PolicyKind::method_a, PolicyKind::method_b};
  const Defaults d = resolve(overrides, preset_default_rate(preset.id),
                             kLossSweepRequests, kLossSweepWarmup);
  for (double x : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0}) {
    DemandPattern pattern;
    pattern.entries.push_back({x, x});
    // This sweep is the symmetric control: with the up and down demands
    // exactly equal, pair selection cannot matter, so the demands are kept
    // deterministic. Size jitter would re-introduce per-request asymmetry
    // and hand the concentrating policy a small packing edge that has
    // nothing to do with the symmetric case under study.
    pattern.sigma_ratio = 0.0;
    preset.points.push_back(
        {x, base_scenario(
                two_pair_topology(kPresetPairCapacity, kPresetPairCapacity),
                pattern, d.rate, d.total, d.warmup)});
  }
  return preset;
}

FigurePreset anti_phase_demand_sweep(const FigureOverrides& overrides) {
  FigurePreset preset;
  preset.id = "fig3-2";
  preset.sweep_param = "y";
  preset.policies = {PolicyKind::method_a, PolicyKind::method_b};
  const Defaults d = resolve(overrides, preset_default_rate(preset.id),
                             kLossSweepRequests, kLossSweepWarmup);
  for (double y : {1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0}) {
    preset.points.push_back(
        {y, base_scenario(
                two_pair_topology(kPresetPairCapacity, kPresetPairCapacity),
                anti_phase_pattern(y, 1.0), d.rate, d.total, d.warmup)});
  }
  return preset;
}

FigurePreset bandwidth_reduction_over_load(const FigureOverrides& overrides) {
  FigurePreset preset;
  preset.id = "fig4";
  preset.sweep_param = "r";
  preset.kind = FigureKind::reduction_sweep;
  preset.reference = PolicyKind::method_a;
  preset.test = PolicyKind::method_b;
  preset.reduction_label = "Zb";
  preset.default_replications = kReductionReplications;
  const Defaults d = resolve(overrides, preset_default_rate(preset.id),
                             kReductionRequests, kReductionWarmup);
  // The sweep runs over the arrival rate itself; the preset default rate is
  // the densest grid point and the --rate override shifts the whole grid.
  for (double scale : {1.0, 1.25, 1.5, 1.75, 2.0}) {
    const double r = d.rate * scale;
    preset.points.push_back(
        {r, base_scenario(
                two_pair_topology(kPresetPairCapacity, kPresetPairCapacity),
                anti_phase_pattern(4.0, 1.0), r, d.total, d.warmup)});
  }
  return preset;
}

FigurePreset fixed_total_split_sweep(const FigureOverrides& overrides) {
  FigurePreset preset;
  preset.id = "fig5";
  preset.sweep_param = "U1";
  preset.policies = {PolicyKind::method_a, PolicyKind::method_b};
  const Defaults d = resolve(overrides, preset_default_rate(preset.id),
                             kLossSweepRequests, kLossSweepWarmup);
  for (double u1 = 0.0; u1 <= kPresetTotalCapacity; u1 += 5.0) {
    const double u2 = kPresetTotalCapacity - u1;
    const Topology topology = drop_dead_pairs(two_pair_topology(u1, u2));
    preset.points.push_back(
        {u1, base_scenario(topology, anti_phase_pattern(4.0, 1.0), d.rate,
                           d.total, d.warmup)});
  }
  return preset;
}

FigurePreset pair_count_sweep(const FigureOverrides& overrides) {
  FigurePreset preset;
  preset.id = "fig6";
  preset.sweep_param = "n";
  preset.policies = {PolicyKind::method_a, PolicyKind::method_b};
  const Defaults d = resolve(overrides, preset_default_rate(preset.id),
                             kLossSweepRequests, kLossSweepWarmup);
  // The arrival rate stays fixed across n: the same service demands meet a
  // growing pool of pairs, so loss falls as n rises.
  for (int n : {2, 3, 4, 5}) {
    Topology topology;
    for (int j = 0; j < n; ++j)
      topology.pairs.push_back(
          {j, kPresetPairCapacity, kPresetPairCapacity, 0.0});
    preset.points.push_back(
        {static_cast<double>(n),
         base_scenario(topology, anti_phase_pattern(4.0, 1.0), d.rate,
                       d.total, d.warmup)});
  }
  return preset;
}

Scenario delay_mix_scenario(double short_fraction, const Defaults& d) {
  Scenario scenario = base_scenario(
      two_pair_topology(kPresetPairCapacity, kPresetPairCapacity,
                        kPresetShortDelay, kPresetLongDelay),
      anti_phase_pattern(4.0, 2.0), d.rate, d.total, d.warmup);
  scenario.delay_mix = DelayClassMix{short_fraction, kPresetShortDelay,
                                     kPresetLongDelay};
  return scenario;
}

FigurePreset delay_mix_sweep(const FigureOverrides& overrides) {
  FigurePreset preset;
  preset.id = "fig7-1";
  preset.sweep_param = "S";
  preset.policies = {PolicyKind::method_b, PolicyKind::method_c};
  const Defaults d = resolve(overrides, preset_default_rate(preset.id),
                             kLossSweepRequests, kLossSweepWarmup);
  for (int tenths = 0; tenths <= 10; ++tenths) {
    const double s = tenths / 10.0;
    preset.points.push_back({s, delay_mix_scenario(s, d)});
  }
  return preset;
}

FigurePreset delay_mix_reduction_sweep(const FigureOverrides& overrides) {
  FigurePreset preset;
  preset.id = "fig7-2";
  preset.sweep_param = "S";
  preset.kind = FigureKind::reduction_sweep;
  preset.reference = PolicyKind::method_b;
  preset.test = PolicyKind::method_c;
  preset.reduction_label = "Zc";
  preset.default_replications = kReductionReplications;
  const Defaults d = resolve(overrides, preset_default_rate(preset.id),
                             kReductionRequests, kReductionWarmup);
  for (int tenths = 0; tenths <= 10; ++tenths) {
    const double s = tenths / 10.0;
    preset.points.push_back({s, delay_mix_scenario(s, d)});
  }
  return preset;
}

}  // namespace

double preset_default_rate(std::string_view figure_id) {
  if (figure_id == "fig3-1") return 1.0;
  if (figure_id == "fig3-2") return 1.0;
  if (figure_id == "fig4") return 0.5;
  if (figure_id == "fig5") return 0.55;
  if (figure_id == "fig6") return 0.4;
  if (figure_id == "fig7-1") return 0.8;
  if (figure_id == "fig7-2") return 0.8;
  throw ValidationError("unknown figure id '" + std::string(figure_id) +
                        "'");
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {
      "fig3-1", "fig3-2", "fig4", "fig5", "fig6", "fig7-1", "fig7-2"};
  return ids;
}

FigurePreset figure_preset(std::string_view figure_id,
                           const FigureOverrides& overrides) {
  FigurePreset preset;
  if (figure_id == "fig3-1") {
    preset = symmetric_demand_sweep(overrides);
  } else if (figure_id == "fig3-2") {
    preset = anti_phase_demand_sweep(overrides);
  } else if (figure_id == "fig4") {
    preset = bandwidth_reduction_over_load(overrides);
  } else if (figure_id == "fig5") {
    preset = fixed_total_split_sweep(overrides);
  } else if (figure_id == "fig6") {
    preset = pair_count_sweep(overrides);
  } else if (figure_id == "fig7-1") {
    preset = delay_mix_sweep(overrides);
  } else if (figure_id == "fig7-2") {
    preset = delay_mix_reduction_sweep(overrides);
  } else {
    std::string valid;
    for (const std::string& id : figure_ids()) {
      if (!valid.empty()) valid += ", ";
      valid += id;
    }
    throw ValidationError("unknown figure id '" + std::string(figure_id) +
                          "'; valid ids: " + valid);
  }

  for (FigurePoint& point : preset.points) {
    point.scenario.policy = preset.kind == FigureKind::loss_sweep
                                ? preset.policies.front()
                                : preset.reference;
    validate_scenario(point.scenario);
  }
  return preset;
}

}  // namespace lspsim
