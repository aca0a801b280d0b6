#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lspsim/core.hpp"
#include "lspsim/policy.hpp"
#include "lspsim/traffic.hpp"

namespace lspsim {

/// Seeds for the two independent random streams of one replication. The
/// traffic stream drives request generation, the policy stream drives
/// tie-breaking, so two policies fed the same seeds see the same requests.
struct Seeds {
  std::uint64_t traffic = 0;
  std::uint64_t policy = 0;
  bool operator==(const Seeds&) const = default;
};

/// Seeds for replication `index` of a run keyed by `master_seed`.
Seeds seeds_for_replication(std::uint64_t master_seed, std::uint64_t index);

/// Departures sort before arrivals at equal timestamps: capacity is freed
/// before the simultaneous newcomer asks for it.
enum class EventKind : std::uint8_t { departure = 0, arrival = 1 };

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::arrival;
  std::int64_t seq = 0;  // insertion order, final tiebreak
  std::int64_t id = 0;   // departure: allocation id; arrival: request index

  bool operator==(const Event&) const = default;
};

/// Heap comparator: a.after(b) for std::priority_queue, so the queue pops
/// events in ascending (time, kind, seq) order.
struct EventAfter {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    if (a.kind != b.kind) return a.kind > b.kind;
    return a.seq > b.seq;
  }
};

struct Scenario {
  Topology topology;
  PolicyKind policy = PolicyKind::method_a;
  DemandPattern pattern;
  ArrivalProcess arrivals;
  std::optional<DelayClassMix> delay_mix;
  std::int64_t total_requests = 200000;
  std::int64_t warmup_requests = 20000;
  Seeds seeds;
  std::int64_t audit_interval = 10000;  // 0 disables invariant audits
  bool record_decisions = false;
  bool operator==(const Scenario&) const = default;
};

void validate_scenario(const Scenario& scenario);

/// Outcome of one measured request, kept only when record_decisions is set.
struct DecisionRecord {
  int pair_id = -1;             // -1 when rejected
  RejectReason reason = RejectReason::none;
  bool deadlock = false;
  bool operator==(const DecisionRecord&) const = default;
};

struct PairOccupancy {
  double peak_up = 0.0;
  double peak_down = 0.0;
  double mean_up = 0.0;  // time-averaged over the measured window
  double mean_down = 0.0;
  bool operator==(const PairOccupancy&) const = default;
};

struct RunResult {
  std::int64_t offered = 0;  // measured requests only (warmup excluded)
  std::int64_t accepted = 0;
  std::int64_t rejected = 0;
  std::int64_t deadlock_rejected = 0;
  std::vector<PairOccupancy> per_pair;
  std::vector<DecisionRecord> decisions;
  double measured_time = 0.0;

  double loss() const;
  bool operator==(const RunResult&) const = default;
};

/// True when the rejection is a deadlock: summed across pairs the request
/// would fit in both directions, yet no single pair can hold it. Pairs a
/// delay-constrained request may not use are excluded from the sums.
bool classify_deadlock(const Topology& topology,
                       const std::vector<LspPairState>& states,
                       const Request& request);

/// Runs one replication to completion and reports measured-window counts.
RunResult run(const Scenario& scenario);

/// Runs `replications` copies of the scenario, seeding replication i from
/// (master_seed, i). At most `jobs` worker threads (0 = hardware default).
std::vector<RunResult> run_replications(const Scenario& scenario,
                                        int replications,
                                        std::uint64_t master_seed, int jobs);

}  // namespace lspsim
