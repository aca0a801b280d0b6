// Acceptance gate for the toolkit. Each test case checks one shipping
// criterion end to end against the built-in experiment presets (default
// seeds, default run lengths) and prints exactly one [PASS]/[FAIL] line.
// Running the binary with no arguments covers all nine criteria; ctest also
// registers them individually with per-criterion timeouts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lspsim/core.hpp"
#include "lspsim/driver.hpp"
#include "lspsim/engine.hpp"
#include "lspsim/metrics.hpp"
#include "lspsim/policy.hpp"
#include "lspsim/presets.hpp"
#include "lspsim/result_table.hpp"
#include "lspsim/rng.hpp"
#include "support/oracles.hpp"

using namespace lspsim;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

/// Prints the criterion's single verdict line; failure detail follows it.
bool report(int number, const std::string& claim, bool ok, double elapsed,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s [%.1f s]\n", ok ? "PASS" : "FAIL",
              number, claim.c_str(), elapsed);
  if (!ok && !detail.empty()) std::fputs(detail.c_str(), stdout);
  std::fflush(stdout);
  return ok;
}

bool guarded(std::string& detail,
             const std::function<bool(std::string&)>& body) {
  try {
    return body(detail);
  } catch (const std::exception& e) {
    detail += std::string("  aborted by exception: ") + e.what() + "\n";
    return false;
  }
}

/// Figures are computed once per process with the shipped defaults
/// (master seed 0, preset run lengths and replication counts).
const ResultTable& figure_table(const std::string& id) {
  static std::map<std::string, ResultTable> cache;
  auto it = cache.find(id);
  if (it == cache.end()) {
    DriverOptions options;
    options.jobs = 0;  // all hardware threads
    it = cache
             .emplace(id, run_figure(figure_preset(id, FigureOverrides{}),
                                     options))
             .first;
  }
  return it->second;
}

const ResultRow* find_row(const ResultTable& table, double sweep_value,
                          const std::string& policy) {
  for (const ResultRow& row : table.rows)
    if (row.sweep_value == sweep_value && row.policy == policy) return &row;
  return nullptr;
}

std::vector<double> sweep_values(const ResultTable& table) {
  std::vector<double> values;
  for (const ResultRow& row : table.rows)
    if (std::find(values.begin(), values.end(), row.sweep_value) ==
        values.end())
      values.push_back(row.sweep_value);
  return values;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0,
                double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c, d);
  return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1: randomized property checks over the selection rules and the
// bandwidth bookkeeping, against the straight-line reference rules.
// ---------------------------------------------------------------------------

Topology random_topology(RandomStream& rng, int n) {
  Topology topology;
  for (int j = 0; j < n; ++j) {
    LspPairSpec spec;
    spec.pair_id = j;
    // Half the time quantized so that exact capacity and availability ties
    // actually occur and exercise the random tie-break path.
    if (rng.uniform01() < 0.5) {
      spec.max_up = 10.0 + 5.0 * static_cast<double>(rng.uniform_below(4));
      spec.max_down = 10.0 + 5.0 * static_cast<double>(rng.uniform_below(4));
    } else {
      spec.max_up = 5.0 + 20.0 * rng.uniform01();
      spec.max_down = 5.0 + 20.0 * rng.uniform01();
    }
    spec.delay = rng.uniform01() < 0.5
                     ? 0.1 * static_cast<double>(1 + rng.uniform_below(3))
                     : 0.05 + 0.4 * rng.uniform01();
    topology.pairs.push_back(spec);
  }
  return topology;
}

std::vector<LspPairState> random_states(RandomStream& rng,
                                        const Topology& topology) {
  std::vector<LspPairState> states = make_states(topology);
  for (int j = 0; j < topology.size(); ++j) {
    if (rng.uniform01() < 0.5) {
      states[j].used_up = 0.5 * static_cast<double>(rng.uniform_below(
                                    1 + static_cast<std::uint64_t>(
                                            2.0 * topology.pairs[j].max_up)));
      states[j].used_down =
          0.5 * static_cast<double>(rng.uniform_below(
                    1 + static_cast<std::uint64_t>(
                            2.0 * topology.pairs[j].max_down)));
    } else {
      states[j].used_up = rng.uniform01() * topology.pairs[j].max_up;
      states[j].used_down = rng.uniform01() * topology.pairs[j].max_down;
    }
  }
  return states;
}

Request random_request(RandomStream& rng, bool delay_constrained) {
  Request request;
  request.need_up = 10.0 * rng.uniform01();
  request.need_down = 10.0 * rng.uniform01();
  if (delay_constrained)
    request.permitted_delay =
        rng.uniform01() < 0.5
            ? 0.1 * static_cast<double>(1 + rng.uniform_below(3))
            : 0.05 + 0.4 * rng.uniform01();
  return request;
}

bool capacity_invariants(std::string& detail) {
  RandomStream rng(101);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng.uniform_below(4));
    const Topology topology = random_topology(rng, n);
    std::vector<LspPairState> states = make_states(topology);
    std::vector<Allocation> live;
    std::int64_t next_id = 1;

    for (int step = 0; step < 250; ++step) {
      if (live.empty() || rng.uniform01() < 0.6) {
        const Request request = random_request(rng, false);
        const int j = static_cast<int>(rng.uniform_below(n));
        if (fits(states[j], topology.pairs[j], request))
          live.push_back(allocate(states[j], topology.pairs[j], request, 0.0,
                                  1.0, next_id++));
      } else {
        const std::size_t k = rng.uniform_below(live.size());
        release(states[live[k].pair_id], live[k]);
        live.erase(live.begin() + k);
      }

      std::vector<double> sum_up(n, 0.0), sum_down(n, 0.0);
      for (const Allocation& a : live) {
        sum_up[a.pair_id] += a.amount_up;
        sum_down[a.pair_id] += a.amount_down;
      }
      for (int j = 0; j < n; ++j) {
        const bool in_range =
            states[j].used_up >= 0.0 && states[j].used_down >= 0.0 &&
            states[j].used_up <= topology.pairs[j].max_up + 1e-9 &&
            states[j].used_down <= topology.pairs[j].max_down + 1e-9;
        const bool matches_ledger =
            std::abs(states[j].used_up - sum_up[j]) <= 1e-6 &&
            std::abs(states[j].used_down - sum_down[j]) <= 1e-6;
        if (!in_range || !matches_ledger) {
          detail += fmt(
              "  capacity invariant broken: used=(%.17g, %.17g) vs "
              "ledger=(%.17g, %.17g)\n",
              states[j].used_up, states[j].used_down, sum_up[j], sum_down[j]);
          return false;
        }
      }
    }
  }
  return true;
}

bool allocate_release_inverse(std::string& detail) {
  RandomStream rng(202);
  for (int i = 0; i < 20000; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform_below(4));
    const Topology topology = random_topology(rng, n);
    std::vector<LspPairState> states = random_states(rng, topology);
    const Request request = random_request(rng, false);
    const int j = static_cast<int>(rng.uniform_below(n));
    if (!fits(states[j], topology.pairs[j], request)) continue;

    const LspPairState before = states[j];
    const Allocation booked = allocate(states[j], topology.pairs[j], request,
                                       0.0, 1.0, i + 1);
    release(states[j], booked);
    if (std::abs(states[j].used_up - before.used_up) > 1e-9 ||
        std::abs(states[j].used_down - before.used_down) > 1e-9) {
      detail += fmt(
          "  allocate+release moved usage: (%.17g, %.17g) -> (%.17g, "
          "%.17g)\n",
          before.used_up, before.used_down, states[j].used_up,
          states[j].used_down);
      return false;
    }
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  RandomStream rng(303);
  RandomStream policy_rng(404);
  const int kStates = 12000;  // every state checks both policies
  for (int i = 0; i < kStates; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform_below(4));
    const Topology topology = random_topology(rng, n);
    const std::vector<LspPairState> states = random_states(rng, topology);
    Request request = random_request(rng, rng.uniform01() < 0.5);

    const std::vector<int> ties_b =
        oracle::method_b_ties(topology, states, request);
    const Decision chose_b =
        select_method_b(topology, states, request, policy_rng);
    const RejectReason expected_reason =
        oracle::any_delay_eligible(topology, request)
            ? RejectReason::no_feasible_pair
            : RejectReason::no_delay_feasible_pair;
    if (ties_b.empty()) {
      if (chose_b.selected() || chose_b.reason != expected_reason) {
        detail += fmt("  least-available: oracle rejects, policy chose pair %g\n",
                      static_cast<double>(chose_b.pair_id));
        return false;
      }
    } else if (!chose_b.selected() ||
               std::find(ties_b.begin(), ties_b.end(), chose_b.pair_id) ==
                   ties_b.end() ||
               (ties_b.size() == 1 && chose_b.pair_id != ties_b[0])) {
      detail += fmt("  least-available: policy pick %g outside the oracle tie set\n",
                    static_cast<double>(chose_b.pair_id));
      return false;
    }

    if (!request.delay_constrained())
      request.permitted_delay = 0.05 + 0.4 * rng.uniform01();
    const std::vector<int> ties_c =
        oracle::method_c_ties(topology, states, request);
    const Decision chose_c =
        select_method_c(topology, states, request, policy_rng);
    const RejectReason expected_c =
        oracle::any_delay_eligible(topology, request)
            ? RejectReason::no_feasible_pair
            : RejectReason::no_delay_feasible_pair;
    if (ties_c.empty()) {
      if (chose_c.selected() || chose_c.reason != expected_c) {
        detail += fmt("  delay-aware: oracle rejects, policy chose pair %g\n",
                      static_cast<double>(chose_c.pair_id));
        return false;
      }
    } else if (!chose_c.selected() ||
               std::find(ties_c.begin(), ties_c.end(), chose_c.pair_id) ==
                   ties_c.end() ||
               (ties_c.size() == 1 && chose_c.pair_id != ties_c[0])) {
      detail += fmt(
          "  delay-aware: policy pick %g outside the oracle tie set\n",
          static_cast<double>(chose_c.pair_id));
      return false;
    }
  }
  return true;
}

bool round_robin_cursor_law(std::string& detail) {
  RandomStream rng(505);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng.uniform_below(4));
    const Topology topology = random_topology(rng, n);
    std::vector<LspPairState> states = make_states(topology);
    std::vector<Allocation> live;
    RoundRobinCursor cursor;
    std::int64_t next_id = 1;

    for (int step = 0; step < 300; ++step) {
      const Request request = random_request(rng, rng.uniform01() < 0.3);
      const int before = cursor.next_index;
      const int expected =
          oracle::method_a(topology, states, request, before);
      const Decision decision =
          select_method_a(topology, states, request, cursor);

      const bool pick_matches = expected == -1 ? !decision.selected()
                                               : decision.pair_id == expected;
      const bool cursor_advanced = cursor.next_index == (before + 1) % n;
      if (!pick_matches || !cursor_advanced) {
        detail += fmt(
            "  round-robin: from cursor %g oracle says %g, policy says %g "
            "(cursor now %g)\n",
            static_cast<double>(before), static_cast<double>(expected),
            static_cast<double>(decision.pair_id),
            static_cast<double>(cursor.next_index));
        return false;
      }

      if (decision.selected())
        live.push_back(allocate(states[decision.pair_id],
                                topology.pairs[decision.pair_id], request,
                                0.0, 1.0, next_id++));
      if (!live.empty() && rng.uniform01() < 0.4) {
        const std::size_t k = rng.uniform_below(live.size());
        release(states[live[k].pair_id], live[k]);
        live.erase(live.begin() + k);
      }
    }
  }
  return true;
}

bool rerun_determinism(std::string& detail) {
  Scenario scenario;
  scenario.topology.pairs.push_back({0, 20.0, 20.0, 0.0});
  scenario.topology.pairs.push_back({1, 20.0, 20.0, 0.0});
  scenario.pattern.entries.push_back({4.0, 1.0});
  scenario.pattern.entries.push_back({1.0, 4.0});
  scenario.arrivals.mean_interarrival = 0.5;
  scenario.arrivals.holding_time = 6.0;
  scenario.policy = PolicyKind::method_b;
  scenario.total_requests = 4000;
  scenario.warmup_requests = 400;
  scenario.seeds = seeds_for_replication(9, 0);

  const RunResult first = run(scenario);
  const RunResult second = run(scenario);
  if (!(first == second)) {
    detail += "  two runs of the same seeded scenario differ\n";
    return false;
  }

  const std::vector<RunResult> serial = run_replications(scenario, 4, 9, 1);
  const std::vector<RunResult> threaded = run_replications(scenario, 4, 9, 3);
  if (!(serial == threaded)) {
    detail += "  replication results depend on the worker count\n";
    return false;
  }

  Scenario reseeded = scenario;
  reseeded.seeds = seeds_for_replication(10, 0);
  if (run(reseeded) == first) {
    detail += "  a different master seed reproduced the identical run\n";
    return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("acceptance");

TEST_CASE("criterion 1: selection and bookkeeping properties hold") {
  Stopwatch watch;
  std::string detail;
  bool ok = guarded(detail, [](std::string& d) {
    bool all = true;
    struct Property {
      const char* label;
      bool (*check)(std::string&);
    };
    const Property properties[] = {
        {"capacity invariants", capacity_invariants},
        {"allocate/release inverse", allocate_release_inverse},
        {"least-available and delay-aware oracle equivalence", oracle_equivalence},
        {"round-robin cursor law", round_robin_cursor_law},
        {"bit-identical reruns", rerun_determinism},
    };
    for (const Property& property : properties) {
      if (!property.check(d)) {
        d += std::string("  failed property: ") + property.label + "\n";
        all = false;
      }
    }
    return all;
  });
  const double elapsed = watch.seconds();
  if (elapsed >= 120.0) {
    detail += fmt("  property suite overran its 120 s budget: %.1f s\n",
                  elapsed);
    ok = false;
  }
  CHECK(report(1, "selection and bookkeeping properties hold", ok, elapsed,
               detail));
}

TEST_CASE("criterion 2: symmetric demands tie round-robin and least-available") {
  Stopwatch watch;
  std::string detail;
  bool ok = guarded(detail, [](std::string& d) {
    const ResultTable& table = figure_table("fig3-1");
    bool all = true;
    for (double x : sweep_values(table)) {
      const ResultRow* a = find_row(table, x, "MethodA");
      const ResultRow* b = find_row(table, x, "MethodB");
      if (a == nullptr || b == nullptr) {
        d += fmt("  missing rows at x=%g\n", x);
        return false;
      }
      if (std::abs(a->mean_loss - b->mean_loss) >
          a->ci_halfwidth + b->ci_halfwidth) {
        d += fmt(
            "  x=%g: losses %.4g +/- %.2g vs %.4g split apart\n", x,
            a->mean_loss, a->ci_halfwidth + b->ci_halfwidth, b->mean_loss);
        all = false;
      }
    }
    return all;
  });
  const double elapsed = watch.seconds();
  if (elapsed >= 300.0) {
    detail += fmt("  sweep overran its 300 s budget: %.1f s\n", elapsed);
    ok = false;
  }
  CHECK(report(2,
               "symmetric demands: round-robin and least-available confidence "
               "intervals overlap at every point",
               ok, elapsed, detail));
}

TEST_CASE("criterion 3: anti-phase demands favor least-available") {
  Stopwatch watch;
  std::string detail;
  const bool ok = guarded(detail, [](std::string& d) {
    const ResultTable& table = figure_table("fig3-2");
    bool never_worse = true;
    bool clearly_better_somewhere = false;
    for (double y : sweep_values(table)) {
      const ResultRow* a = find_row(table, y, "MethodA");
      const ResultRow* b = find_row(table, y, "MethodB");
      if (a == nullptr || b == nullptr) {
        d += fmt("  missing rows at y=%g\n", y);
        return false;
      }
      if (std::max(a->mean_loss, b->mean_loss) >= 1e-3 &&
          b->mean_loss > a->mean_loss) {
        d += fmt("  y=%g: least-available loses more (%.4g > %.4g)\n", y,
                 b->mean_loss, a->mean_loss);
        never_worse = false;
      }
      if (a->mean_loss - a->ci_halfwidth > b->mean_loss + b->ci_halfwidth)
        clearly_better_somewhere = true;
    }
    if (!clearly_better_somewhere)
      d += "  no point separates the confidence intervals\n";
    return never_worse && clearly_better_somewhere;
  });
  CHECK(report(3,
               "anti-phase demands: least-available never loses more and is "
               "clearly better at some point",
               ok, watch.seconds(), detail));
}

TEST_CASE("criterion 4: least-available equal-loss capacity reduction peaks in "
          "the 5..15% band") {
  Stopwatch watch;
  std::string detail;
  bool ok = guarded(detail, [](std::string& d) {
    const ResultTable& table = figure_table("fig4");
    double best = -1.0;
    double at = 0.0;
    for (const ResultRow& row : table.rows) {
      if (row.mean_loss > best) {
        best = row.mean_loss;
        at = row.sweep_value;
      }
    }
    if (best < 0.05 || best > 0.15) {
      d += fmt("  max reduction %.4g (at r=%g) outside [0.05, 0.15]\n", best,
               at);
      for (const ResultRow& row : table.rows)
        d += fmt("    r=%g: Zb=%.4g\n", row.sweep_value, row.mean_loss);
      return false;
    }
    return true;
  });
  const double elapsed = watch.seconds();
  if (elapsed >= 1200.0) {
    detail += fmt("  reduction sweep overran its 1200 s budget: %.1f s\n",
                  elapsed);
    ok = false;
  }
  CHECK(report(4,
               "equal-loss capacity reduction of least-available peaks between 5% "
               "and 15% over the load grid",
               ok, elapsed, detail));
}

TEST_CASE("criterion 5: concentrating a fixed capacity total does not "
          "hurt") {
  Stopwatch watch;
  std::string detail;
  const bool ok = guarded(detail, [](std::string& d) {
    const ResultTable& table = figure_table("fig5");
    bool all = true;
    for (const char* policy : {"MethodA", "MethodB"}) {
      const ResultRow* concentrated = find_row(table, 40.0, policy);
      const ResultRow* split = find_row(table, 20.0, policy);
      if (concentrated == nullptr || split == nullptr) {
        d += "  missing rows at U1=40 or U1=20\n";
        return false;
      }
      if (concentrated->mean_loss > split->mean_loss) {
        d += fmt("  one 40/40 pair loses more than two 20/20 pairs: %.4g > "
                 "%.4g\n",
                 concentrated->mean_loss, split->mean_loss);
        all = false;
      }
    }
    return all;
  });
  CHECK(report(5,
               "a single pair holding the whole capacity never loses more "
               "than the even two-pair split",
               ok, watch.seconds(), detail));
}

TEST_CASE("criterion 6: loss falls with more pairs and the least-available edge "
          "dips at the odd count") {
  Stopwatch watch;
  std::string detail;
  const bool ok = guarded(detail, [](std::string& d) {
    const ResultTable& table = figure_table("fig6");
    std::map<int, double> loss_a, loss_b;
    for (int n : {2, 3, 4}) {
      const ResultRow* a = find_row(table, static_cast<double>(n), "MethodA");
      const ResultRow* b = find_row(table, static_cast<double>(n), "MethodB");
      if (a == nullptr || b == nullptr) {
        d += fmt("  missing rows at n=%g\n", static_cast<double>(n));
        return false;
      }
      loss_a[n] = a->mean_loss;
      loss_b[n] = b->mean_loss;
    }

    bool all = true;
    if (!(loss_a[2] > loss_a[3] && loss_a[3] > loss_a[4])) {
      d += fmt("  round-robin loss not falling: %.4g, %.4g, %.4g\n",
               loss_a[2], loss_a[3], loss_a[4]);
      all = false;
    }
    if (!(loss_b[2] > loss_b[3] && loss_b[3] > loss_b[4])) {
      d += fmt("  least-available loss not falling: %.4g, %.4g, %.4g\n", loss_b[2],
               loss_b[3], loss_b[4]);
      all = false;
    }
    const double gap2 = loss_a[2] - loss_b[2];
    const double gap3 = loss_a[3] - loss_b[3];
    const double gap4 = loss_a[4] - loss_b[4];
    if (!(gap3 < gap2 && gap3 < gap4)) {
      d += fmt("  least-available edge has no dip at n=3: gaps %.4g, %.4g, %.4g\n",
               gap2, gap3, gap4);
      all = false;
    }
    return all;
  });
  CHECK(report(6,
               "two to four pairs lose progressively less and the least-available "
               "advantage dips at three pairs",
               ok, watch.seconds(), detail));
}

TEST_CASE("criterion 7: delay-aware selection never loses more and its edge "
          "peaks at a mixed share") {
  Stopwatch watch;
  std::string detail;
  const bool ok = guarded(detail, [](std::string& d) {
    const ResultTable& table = figure_table("fig7-1");
    bool never_worse = true;
    double best_gap = -1.0;
    double best_at = -1.0;
    for (double s : sweep_values(table)) {
      const ResultRow* b = find_row(table, s, "MethodB");
      const ResultRow* c = find_row(table, s, "MethodC");
      if (b == nullptr || c == nullptr) {
        d += fmt("  missing rows at S=%g\n", s);
        return false;
      }
      if (c->mean_loss > b->mean_loss) {
        d += fmt("  S=%g: delay-aware loses more (%.4g > %.4g)\n", s,
                 c->mean_loss, b->mean_loss);
        never_worse = false;
      }
      const double gap = b->mean_loss - c->mean_loss;
      if (gap > best_gap) {
        best_gap = gap;
        best_at = s;
      }
    }
    if (!(best_at >= 0.5 && best_at <= 0.9)) {
      d += fmt("  widest gap %.4g sits at S=%g, outside [0.5, 0.9]\n",
               best_gap, best_at);
      never_worse = false;
    }
    return never_worse;
  });
  CHECK(report(7,
               "delay-aware selection never loses more than least-available and "
               "its edge is widest at a mixed delay share",
               ok, watch.seconds(), detail));
}

TEST_CASE("criterion 8: delay-aware equal-loss capacity reduction peaks in "
          "the 8..20% band") {
  Stopwatch watch;
  std::string detail;
  const bool ok = guarded(detail, [](std::string& d) {
    const ResultTable& table = figure_table("fig7-2");
    double best = -1.0;
    double at = -1.0;
    for (const ResultRow& row : table.rows) {
      if (row.mean_loss > best) {
        best = row.mean_loss;
        at = row.sweep_value;
      }
    }
    bool all = true;
    if (best < 0.08 || best > 0.20) {
      d += fmt("  max reduction %.4g outside [0.08, 0.20]\n", best);
      all = false;
    }
    if (!(at >= 0.5 && at <= 0.9)) {
      d += fmt("  max reduction sits at S=%g, outside [0.5, 0.9]\n", at);
      all = false;
    }
    if (!all)
      for (const ResultRow& row : table.rows)
        d += fmt("    S=%g: Zc=%.4g\n", row.sweep_value, row.mean_loss);
    return all;
  });
  CHECK(report(8,
               "equal-loss capacity reduction of delay-aware selection "
               "peaks between 8% and 20% at a mixed delay share",
               ok, watch.seconds(), detail));
}

TEST_CASE("criterion 9: round-robin rejections are deadlocks more often") {
  Stopwatch watch;
  std::string detail;
  const bool ok = guarded(detail, [](std::string& d) {
    const ResultTable& table = figure_table("fig3-2");
    double best_gap = -1.0;
    double best_at = 0.0;
    for (double y : sweep_values(table)) {
      const ResultRow* a = find_row(table, y, "MethodA");
      const ResultRow* b = find_row(table, y, "MethodB");
      if (a == nullptr || b == nullptr) {
        d += fmt("  missing rows at y=%g\n", y);
        return false;
      }
      if (a->mean_loss - b->mean_loss > best_gap) {
        best_gap = a->mean_loss - b->mean_loss;
        best_at = y;
      }
    }
    const ResultRow* a = find_row(table, best_at, "MethodA");
    const ResultRow* b = find_row(table, best_at, "MethodB");
    if (!(a->deadlock_fraction > b->deadlock_fraction)) {
      d += fmt(
          "  y=%g: deadlock share %.4g under round-robin vs %.4g under "
          "least-available\n",
          best_at, a->deadlock_fraction, b->deadlock_fraction);
      return false;
    }
    return true;
  });
  CHECK(report(9,
               "at the widest anti-phase gap a larger share of round-robin "
               "rejections are deadlocks",
               ok, watch.seconds(), detail));
}

TEST_SUITE_END();
