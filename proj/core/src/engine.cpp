#include "lspsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <queue>
#include <thread>
#include <unordered_map>

#include "lspsim/errors.hpp"

namespace lspsim {

Seeds seeds_for_replication(std::uint64_t master_seed, std::uint64_t index) {
  return {derive_seed(master_seed, kTrafficStream, index),
          derive_seed(master_seed, kPolicyStream, index)};
}

void validate_scenario(const Scenario& scenario) {
  validate_policy_topology(scenario.policy, scenario.topology);
  validate_pattern(scenario.pattern);
  validate_arrivals(scenario.arrivals);
  if (scenario.delay_mix) validate_mix(*scenario.delay_mix);
  check_input(scenario.policy != PolicyKind::method_c ||
                  scenario.delay_mix.has_value(),
              "scenario: MethodC requires a delay_mix");
  check_input(scenario.total_requests > 0, "total_requests must be > 0");
  check_input(scenario.warmup_requests >= 0 &&
                  scenario.warmup_requests < scenario.total_requests,
              "warmup_requests must lie in [0, total_requests)");
  check_input(scenario.audit_interval >= 0, "audit_interval must be >= 0");
}

double RunResult::loss() const {
  require(offered > 0, "loss: no offered requests");
  return static_cast<double>(rejected) / static_cast<double>(offered);
}

bool classify_deadlock(const Topology& topology,
                       const std::vector<LspPairState>& states,
                       const Request& request) {
  double sum_up = 0.0;
  double sum_down = 0.0;
  for (int j = 0; j < topology.size(); ++j) {
    if (!delay_eligible(topology.pairs[static_cast<std::size_t>(j)], request))
      continue;
    const AvailableBandwidth avail =
        available(states[static_cast<std::size_t>(j)],
                  topology.pairs[static_cast<std::size_t>(j)]);
    if (fits(avail, request)) return false;
    sum_up += avail.up;
    sum_down += avail.down;
  }
  return sum_up >= request.need_up && sum_down >= request.need_down;
}

namespace {

// Allocation registry: pending departures by allocation id. Lets the loop
// detect double releases and audit that per-pair usage equals the sum of
// live allocations.
using Registry = std::unordered_map<std::int64_t, Allocation>;

constexpr double kAuditSlack = 1e-6;

void audit_states(const Topology& topology,
                  const std::vector<LspPairState>& states,
                  const Registry& registry) {
  const std::size_t n = topology.pairs.size();
  std::vector<double> sum_up(n, 0.0);
  std::vector<double> sum_down(n, 0.0);
  for (const auto& [id, alloc] : registry) {
    sum_up[static_cast<std::size_t>(alloc.pair_id)] += alloc.amount_up;
    sum_down[static_cast<std::size_t>(alloc.pair_id)] += alloc.amount_down;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const LspPairState& st = states[j];
    const LspPairSpec& spec = topology.pairs[j];
    require(st.used_up >= 0.0 && st.used_down >= 0.0,
            "audit: negative usage");
    require(st.used_up <= spec.max_up + kAuditSlack &&
                st.used_down <= spec.max_down + kAuditSlack,
            "audit: usage exceeds capacity");
    require(std::abs(st.used_up - sum_up[j]) <= kAuditSlack &&
                std::abs(st.used_down - sum_down[j]) <= kAuditSlack,
            "audit: usage diverged from the live allocation sum");
  }
}

// Accumulates time-weighted usage between events inside the measured window.
struct OccupancyTracker {
  explicit OccupancyTracker(std::size_t pairs)
      : integral_up(pairs, 0.0), integral_down(pairs, 0.0) {}

  bool open = false;
  double open_time = 0.0;
  double last_time = 0.0;
  std::vector<double> integral_up;
  std::vector<double> integral_down;

  void open_window(double now, const std::vector<LspPairState>& states,
                   std::vector<PairOccupancy>& per_pair) {
    open = true;
    open_time = now;
    last_time = now;
    for (std::size_t j = 0; j < states.size(); ++j) {
      per_pair[j].peak_up = states[j].used_up;
      per_pair[j].peak_down = states[j].used_down;
    }
  }

  void advance(double now, const std::vector<LspPairState>& states) {
    if (!open) return;
    const double dt = now - last_time;
    for (std::size_t j = 0; j < states.size(); ++j) {
      integral_up[j] += states[j].used_up * dt;
      integral_down[j] += states[j].used_down * dt;
    }
    last_time = now;
  }

  void finish(const std::vector<LspPairState>& states,
              std::vector<PairOccupancy>& per_pair, double& measured_time) {
    if (!open) return;
    measured_time = last_time - open_time;
    for (std::size_t j = 0; j < states.size(); ++j) {
      if (measured_time > 0.0) {
        per_pair[j].mean_up = integral_up[j] / measured_time;
        per_pair[j].mean_down = integral_down[j] / measured_time;
      } else {
        per_pair[j].mean_up = states[j].used_up;
        per_pair[j].mean_down = states[j].used_down;
      }
    }
  }
};

}  // namespace

RunResult run(const Scenario& scenario) {
  validate_scenario(scenario);

  const Topology& topology = scenario.topology;
  const std::size_t n = static_cast<std::size_t>(topology.size());
  std::vector<LspPairState> states = make_states(topology);

  RandomStream traffic_rng(scenario.seeds.traffic);
  RandomStream policy_rng(scenario.seeds.policy);
  RoundRobinCursor cursor;

  std::priority_queue<Event, std::vector<Event>, EventAfter> events;
  Registry registry;
  registry.reserve(1024);

  RunResult result;
  result.per_pair.resize(n);
  if (scenario.record_decisions)
    result.decisions.reserve(static_cast<std::size_t>(
        scenario.total_requests - scenario.warmup_requests));

  OccupancyTracker occupancy(n);
  const DelayClassMix* mix =
      scenario.delay_mix ? &*scenario.delay_mix : nullptr;

  std::int64_t seq = 0;
  std::int64_t next_alloc_id = 0;
  std::int64_t accepted_total = 0;    // warmup included
  std::int64_t departures_seen = 0;
  std::int64_t events_processed = 0;
  double clock = 0.0;

  events.push(Event{next_arrival(0.0, scenario.arrivals, traffic_rng),
                    EventKind::arrival, seq++, 0});

  while (!events.empty()) {
    const Event ev = events.top();
    events.pop();
    require(ev.time >= clock, "event times must be non-decreasing");
    clock = ev.time;
    occupancy.advance(clock, states);

    if (ev.kind == EventKind::departure) {
      auto it = registry.find(ev.id);
      require(it != registry.end(),
              "departure for an allocation not in the registry");
      release(states[static_cast<std::size_t>(it->second.pair_id)],
              it->second);
      registry.erase(it);
      ++departures_seen;
    } else {
      const std::int64_t index = ev.id;
      Request request =
          generate_request(scenario.pattern, mix, index, clock, traffic_rng);
      const bool measured = index >= scenario.warmup_requests;
      if (measured && !occupancy.open)
        occupancy.open_window(clock, states, result.per_pair);

      const Decision decision = decide(scenario.policy, topology, states,
                                       request, cursor, policy_rng);
      bool deadlock = false;
      if (decision.selected()) {
        const std::size_t j = static_cast<std::size_t>(decision.pair_id);
        const Allocation alloc =
            allocate(states[j], topology.pairs[j], request, clock,
                     scenario.arrivals.holding_time, next_alloc_id++);
        events.push(
            Event{alloc.release_time, EventKind::departure, seq++,
                  alloc.alloc_id});
        registry.emplace(alloc.alloc_id, alloc);
        ++accepted_total;
        if (measured) {
          ++result.accepted;
          PairOccupancy& occ = result.per_pair[j];
          occ.peak_up = std::max(occ.peak_up, states[j].used_up);
          occ.peak_down = std::max(occ.peak_down, states[j].used_down);
        }
      } else {
        deadlock = decision.reason == RejectReason::no_feasible_pair &&
                   classify_deadlock(topology, states, request);
        if (measured) {
          ++result.rejected;
          if (deadlock) ++result.deadlock_rejected;
        }
      }
      if (measured) {
        ++result.offered;
        if (scenario.record_decisions)
          result.decisions.push_back(
              DecisionRecord{decision.pair_id, decision.reason, deadlock});
      }

      if (index + 1 < scenario.total_requests)
        events.push(Event{next_arrival(clock, scenario.arrivals, traffic_rng),
                          EventKind::arrival, seq++, index + 1});
    }

    ++events_processed;
    if (scenario.audit_interval > 0 &&
        events_processed % scenario.audit_interval == 0)
      audit_states(topology, states, registry);
  }

  require(departures_seen == accepted_total,
          "departures processed must equal arrivals accepted after drain");
  require(registry.empty(), "allocations left in the registry after drain");
  require(result.offered ==
              scenario.total_requests - scenario.warmup_requests,
          "offered count must equal the measured request count");
  require(result.offered == result.accepted + result.rejected,
          "offered must split into accepted and rejected");
  audit_states(topology, states, registry);
  occupancy.finish(states, result.per_pair, result.measured_time);
  return result;
}

std::vector<RunResult> run_replications(const Scenario& scenario,
                                        int replications,
                                        std::uint64_t master_seed, int jobs) {
  check_input(replications >= 1, "replications must be >= 1");
  check_input(jobs >= 0, "jobs must be >= 0");
  if (jobs == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    jobs = hw == 0 ? 1 : static_cast<int>(hw);
  }
  jobs = std::min(jobs, replications);

  std::vector<RunResult> results(static_cast<std::size_t>(replications));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= replications) return;
      try {
        Scenario rep = scenario;
        rep.seeds =
            seeds_for_replication(master_seed, static_cast<std::uint64_t>(i));
        results[static_cast<std::size_t>(i)] = run(rep);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace lspsim
