#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lspsim/engine.hpp"

namespace lspsim {

/// Experiment constants shared by the figure presets. Capacities are in
/// bandwidth units, times in seconds.
inline constexpr double kPresetPairCapacity = 20.0;  // U = D per pair
inline constexpr double kPresetTotalCapacity = 40.0;  // fixed-total sweeps
inline constexpr double kPresetHoldingTime = 6.0;     // H
inline constexpr double kPresetShortDelay = 0.1;      // T_1, short bound
inline constexpr double kPresetLongDelay = 0.3;       // T_2, long bound

/// Run-length defaults. Reduction sweeps run many bisection evaluations per
/// point, so they use shorter replications than plain loss sweeps.
inline constexpr std::int64_t kLossSweepRequests = 200000;
inline constexpr std::int64_t kLossSweepWarmup = 20000;
inline constexpr int kLossSweepReplications = 10;
inline constexpr std::int64_t kReductionRequests = 60000;
inline constexpr std::int64_t kReductionWarmup = 6000;
inline constexpr int kReductionReplications = 6;

/// Default mean inter-arrival times, tuned so the reference policy's loss
/// lands in the legible 10^-3..10^-1 band at the interesting sweep points.
double preset_default_rate(std::string_view figure_id);

/// Command-line overrides applied on top of a preset's defaults.
struct FigureOverrides {
  std::optional<double> rate;
  std::optional<std::int64_t> total_requests;
  std::optional<std::int64_t> warmup_requests;
};

enum class FigureKind : std::uint8_t {
  loss_sweep,      // per point: one loss row per compared policy
  reduction_sweep  // per point: one row with the reduction factor
};

struct FigurePoint {
  double sweep_value = 0.0;
  Scenario scenario;  // policy field is overwritten per compared policy
};

struct FigurePreset {
  std::string id;
  std::string sweep_param;
  FigureKind kind = FigureKind::loss_sweep;
  std::vector<PolicyKind> policies;  // loss sweeps: the compared policies
  PolicyKind reference = PolicyKind::method_a;  // reduction sweeps only
  PolicyKind test = PolicyKind::method_b;
  std::string reduction_label;  // result-table policy column, e.g. "Zb"
  int default_replications = kLossSweepReplications;
  std::vector<FigurePoint> points;
};

const std::vector<std::string>& figure_ids();

/// Builds a preset. Unknown ids raise a validation error listing the valid
/// ones. Sweep points whose topology would contain a pair with zero
/// capacity in both directions (the fixed-total corner points) drop that
/// pair instead of carrying dead weight.
FigurePreset figure_preset(std::string_view figure_id,
                           const FigureOverrides& overrides);

}  // namespace lspsim
