#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace lspsim {

/// Static description of one bidirectional path pair between a pair of edge
/// nodes: per-direction capacity plus the edge-to-edge delay of the pair.
struct LspPairSpec {
  int pair_id = 0;
  double max_up = 0.0;
  double max_down = 0.0;
  double delay = 0.0;  // seconds
  bool operator==(const LspPairSpec&) const = default;
};

/// Ordered list of pairs. The list order is the pre-defined probe order used
/// by round-robin selection.
struct Topology {
  std::vector<LspPairSpec> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
  bool operator==(const Topology&) const = default;
};

/// Throws ValidationError when the topology is empty, ids are not 0..n-1 in
/// list order, or any capacity or delay is negative.
void validate_topology(const Topology& topology);

/// Live bandwidth usage of one pair.
struct LspPairState {
  int pair_id = 0;
  double used_up = 0.0;
  double used_down = 0.0;
  bool operator==(const LspPairState&) const = default;
};

std::vector<LspPairState> make_states(const Topology& topology);

inline constexpr double kUnconstrainedDelay =
    std::numeric_limits<double>::infinity();

/// One service demand: bandwidth required in both directions at once, plus
/// an optional upper bound on acceptable pair delay.
struct Request {
  std::int64_t req_id = 0;
  double need_up = 0.0;
  double need_down = 0.0;
  double permitted_delay = kUnconstrainedDelay;
  double arrival_time = 0.0;

  bool delay_constrained() const {
    return permitted_delay != kUnconstrainedDelay;
  }
  bool operator==(const Request&) const = default;
};

/// Record of bandwidth held by one accepted request until release_time.
struct Allocation {
  std::int64_t alloc_id = 0;
  std::int64_t req_id = 0;
  int pair_id = 0;
  double amount_up = 0.0;
  double amount_down = 0.0;
  double release_time = 0.0;
  bool operator==(const Allocation&) const = default;
};

struct AvailableBandwidth {
  double up = 0.0;
  double down = 0.0;
  bool operator==(const AvailableBandwidth&) const = default;
};

/// max - used per direction. state and spec must refer to the same pair.
AvailableBandwidth available(const LspPairState& state,
                             const LspPairSpec& spec);

/// True iff both directions of the demand fit. Boundary demands
/// (need == avail) fit.
bool fits(const AvailableBandwidth& avail, const Request& request);
bool fits(const LspPairState& state, const LspPairSpec& spec,
          const Request& request);

/// Books the request on the pair. Caller must have checked fits(); both
/// directions are taken at once and in full (no partial allocation).
Allocation allocate(LspPairState& state, const LspPairSpec& spec,
                    const Request& request, double now, double holding_time,
                    std::int64_t alloc_id);

/// Returns the allocation's bandwidth to the pair.
void release(LspPairState& state, const Allocation& allocation);

}  // namespace lspsim
