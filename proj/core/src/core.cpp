#include "lspsim/core.hpp"

#include <cmath>
#include <string>

#include "lspsim/errors.hpp"

namespace lspsim {

namespace {

// Arithmetic drift from repeated add/subtract of doubles; usage counters
// within this distance of zero are snapped back to exact zero so that an
// empty pair is bit-identical to a never-used pair.
constexpr double kZeroSnap = 1e-9;

double snap_zero(double v) {
  return (v < 0.0 && v > -kZeroSnap) || (v >= 0.0 && v < kZeroSnap) ? 0.0 : v;
}

}  // namespace

void validate_topology(const Topology& topology) {
  check_input(!topology.pairs.empty(), "topology: needs at least one pair");
  for (int i = 0; i < topology.size(); ++i) {
    const LspPairSpec& p = topology.pairs[i];
    check_input(p.pair_id == i,
                "topology: pair_id must equal list position (pair " +
                    std::to_string(i) + ")");
    check_input(p.max_up >= 0.0 && p.max_down >= 0.0,
                "topology: capacities must be non-negative (pair " +
                    std::to_string(i) + ")");
    check_input(p.delay >= 0.0, "topology: delay must be non-negative (pair " +
                                    std::to_string(i) + ")");
  }
}

std::vector<LspPairState> make_states(const Topology& topology) {
  std::vector<LspPairState> states(topology.pairs.size());
  for (int i = 0; i < topology.size(); ++i) states[i].pair_id = i;
  return states;
}

AvailableBandwidth available(const LspPairState& state,
                             const LspPairSpec& spec) {
  require(state.pair_id == spec.pair_id,
          "available: state and spec refer to different pairs");
  return {spec.max_up - state.used_up, spec.max_down - state.used_down};
}

bool fits(const AvailableBandwidth& avail, const Request& request) {
  return avail.up >= request.need_up && avail.down >= request.need_down;
}

bool fits(const LspPairState& state, const LspPairSpec& spec,
          const Request& request) {
  return fits(available(state, spec), request);
}

Allocation allocate(LspPairState& state, const LspPairSpec& spec,
                    const Request& request, double now, double holding_time,
                    std::int64_t alloc_id) {
  require(fits(state, spec, request),
          "allocate: request does not fit; policies must never allocate an "
          "infeasible request");
  state.used_up += request.need_up;
  state.used_down += request.need_down;
  return Allocation{alloc_id,         request.req_id,   spec.pair_id,
                    request.need_up,  request.need_down, now + holding_time};
}

void release(LspPairState& state, const Allocation& allocation) {
  require(state.pair_id == allocation.pair_id,
          "release: allocation belongs to a different pair");
  state.used_up = snap_zero(state.used_up - allocation.amount_up);
  state.used_down = snap_zero(state.used_down - allocation.amount_down);
  require(state.used_up >= 0.0 && state.used_down >= 0.0,
          "release: usage went negative; allocation was not live on this "
          "pair");
}

}  // namespace lspsim
