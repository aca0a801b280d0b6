// Microbenchmarks for the hot paths: whole-replication throughput per
// selection policy, a single selection decision, and request generation.

#include <benchmark/benchmark.h>

#include <vector>

#include "lspsim/core.hpp"
#include "lspsim/engine.hpp"
#include "lspsim/policy.hpp"
#include "lspsim/rng.hpp"
#include "lspsim/traffic.hpp"

namespace {

using namespace lspsim;

Scenario contested_scenario(PolicyKind policy) {
  Scenario scenario;
  scenario.topology.pairs.push_back({0, 20.0, 20.0, 0.1});
  scenario.topology.pairs.push_back({1, 20.0, 20.0, 0.3});
  scenario.pattern.entries.push_back({4.0, 1.0});
  scenario.pattern.entries.push_back({1.0, 4.0});
  scenario.arrivals.mean_interarrival = 0.5;
  scenario.arrivals.holding_time = 6.0;
  scenario.policy = policy;
  if (policy == PolicyKind::method_c)
    scenario.delay_mix = DelayClassMix{0.5, 0.1, 0.3};
  scenario.total_requests = 20000;
  scenario.warmup_requests = 2000;
  scenario.seeds = seeds_for_replication(1, 0);
  scenario.audit_interval = 10000;
  return scenario;
}

void BM_run_replication(benchmark::State& state, PolicyKind policy) {
  const Scenario scenario = contested_scenario(policy);
  for (auto _ : state) {
    RunResult result = run(scenario);
    benchmark::DoNotOptimize(result.accepted);
  }
  state.SetItemsProcessed(state.iterations() * scenario.total_requests);
}

void BM_decide(benchmark::State& state, PolicyKind policy) {
  Topology topology;
  for (int j = 0; j < 4; ++j) topology.pairs.push_back({j, 20.0, 20.0, 0.1 * (j + 1)});

  // A fixed set of mid-load states and requests, cycled through.
  RandomStream setup(7);
  constexpr int kCases = 1024;
  std::vector<std::vector<LspPairState>> states(kCases,
                                                make_states(topology));
  std::vector<Request> requests(kCases);
  for (int i = 0; i < kCases; ++i) {
    for (LspPairState& s : states[i]) {
      s.used_up = setup.uniform01() * 18.0;
      s.used_down = setup.uniform01() * 18.0;
    }
    requests[i].need_up = setup.uniform01() * 6.0;
    requests[i].need_down = setup.uniform01() * 6.0;
    if (policy == PolicyKind::method_c)
      requests[i].permitted_delay = 0.2 + setup.uniform01() * 0.2;
  }

  RoundRobinCursor cursor;
  RandomStream rng(11);
  int i = 0;
  for (auto _ : state) {
    const Decision decision =
        decide(policy, topology, states[i], requests[i], cursor, rng);
    benchmark::DoNotOptimize(decision.pair_id);
    i = (i + 1) % kCases;
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_generate_request(benchmark::State& state) {
  DemandPattern pattern;
  pattern.entries.push_back({4.0, 1.0});
  pattern.entries.push_back({1.0, 4.0});
  const DelayClassMix mix{0.5, 0.1, 0.3};
  RandomStream rng(3);
  std::int64_t index = 0;
  for (auto _ : state) {
    const Request request =
        generate_request(pattern, &mix, index++, 0.0, rng);
    benchmark::DoNotOptimize(request.need_up);
  }
  state.SetItemsProcessed(state.iterations());
}

BENCHMARK_CAPTURE(BM_run_replication, round_robin, PolicyKind::method_a)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_run_replication, least_available, PolicyKind::method_b)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_run_replication, delay_aware, PolicyKind::method_c)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_decide, round_robin, PolicyKind::method_a);
BENCHMARK_CAPTURE(BM_decide, least_available, PolicyKind::method_b);
BENCHMARK_CAPTURE(BM_decide, delay_aware, PolicyKind::method_c);
BENCHMARK(BM_generate_request);

}  // namespace

BENCHMARK_MAIN();
