#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "lspsim/core.hpp"
#include "lspsim/rng.hpp"

namespace lspsim {

enum class PolicyKind : std::uint8_t { method_a, method_b, method_c };

const char* to_string(PolicyKind kind);
std::optional<PolicyKind> policy_from_string(std::string_view name);

enum class RejectReason : std::uint8_t {
  none,
  no_feasible_pair,        // bandwidth exhausted on every eligible pair
  no_delay_feasible_pair,  // no pair meets the request's delay bound at all
};

const char* to_string(RejectReason reason);

struct Decision {
  std::int32_t pair_id = -1;  // >= 0 when a pair was selected
  RejectReason reason = RejectReason::none;

  bool selected() const { return pair_id >= 0; }
  static Decision select(int pair) {
    return {static_cast<std::int32_t>(pair), RejectReason::none};
  }
  static Decision reject(RejectReason r) { return {-1, r}; }
  bool operator==(const Decision&) const = default;
};

/// Round-robin probe position. Advances by exactly one per request handled,
/// no matter whether the request was accepted, rejected, or where it landed.
struct RoundRobinCursor {
  int next_index = 0;
  void advance(int pair_count) {
    next_index = (next_index + 1) % pair_count;
  }
};

enum class Direction : std::uint8_t { up, down };

/// Which direction of a demand is proportionately largest, measured against
/// the tightest per-direction capacity in the topology. Upward wins ties.
struct KeyDirection {
  Direction direction = Direction::up;
  double demand_ratio_up = 0.0;    // need_up / min_max_up
  double demand_ratio_down = 0.0;  // need_down / min_max_down
  double min_max_up = 0.0;         // min over pairs of max_up
  double min_max_down = 0.0;       // min over pairs of max_down
};

KeyDirection key_direction(const Topology& topology, const Request& request);

/// Whether the pair's delay meets the request's bound. A pair whose delay
/// exactly equals the bound is still usable; an unconstrained request may
/// use any pair.
bool delay_eligible(const LspPairSpec& spec, const Request& request);

/// Round-robin: probe pairs cyclically starting at the cursor, take the
/// first where the request fits. The cursor advances once per call.
Decision select_method_a(const Topology& topology,
                         std::span<const LspPairState> states,
                         const Request& request, RoundRobinCursor& cursor);

/// Key-direction concentration: among fitting pairs, take the one with the
/// least available bandwidth in the key direction; ties drawn uniformly
/// from rng.
Decision select_method_b(const Topology& topology,
                         std::span<const LspPairState> states,
                         const Request& request, RandomStream& rng);

/// Delay-aware: among fitting pairs whose delay meets the request's bound,
/// take the one with the largest delay; ties drawn uniformly from rng.
/// Requires a finite permitted delay on the request.
Decision select_method_c(const Topology& topology,
                         std::span<const LspPairState> states,
                         const Request& request, RandomStream& rng);

/// Unified entry point used by the simulation loop. A request with a finite
/// permitted delay is never placed on a pair exceeding that delay, whatever
/// the policy; the delay bound is part of the service, not of the selection
/// heuristic.
Decision decide(PolicyKind kind, const Topology& topology,
                std::span<const LspPairState> states, const Request& request,
                RoundRobinCursor& cursor, RandomStream& rng);

/// Load-time compatibility check. MethodB needs strictly positive
/// per-direction minimum capacities for the key-direction ratios.
void validate_policy_topology(PolicyKind kind, const Topology& topology);

}  // namespace lspsim
