#include "lspsim/policy.hpp"

#include <algorithm>
#include <limits>

#include "lspsim/errors.hpp"

namespace lspsim {

const char* to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::method_a: return "MethodA";
    case PolicyKind::method_b: return "MethodB";
    case PolicyKind::method_c: return "MethodC";
  }
  return "?";
}

std::optional<PolicyKind> policy_from_string(std::string_view name) {
  if (name == "MethodA") return PolicyKind::method_a;
  if (name == "MethodB") return PolicyKind::method_b;
  if (name == "MethodC") return PolicyKind::method_c;
  return std::nullopt;
}

const char* to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::none: return "none";
    case RejectReason::no_feasible_pair: return "NoFeasiblePair";
    case RejectReason::no_delay_feasible_pair: return "NoDelayFeasiblePair";
  }
  return "?";
}

bool delay_eligible(const LspPairSpec& spec, const Request& request) {
  return !request.delay_constrained() || spec.delay <= request.permitted_delay;
}

namespace {

int count_delay_eligible(const Topology& topology, const Request& request) {
  int n = 0;
  for (const LspPairSpec& spec : topology.pairs)
    if (delay_eligible(spec, request)) ++n;
  return n;
}

Decision probe_round_robin(const Topology& topology,
                           std::span<const LspPairState> states,
                           const Request& request,
                           const RoundRobinCursor& cursor) {
  const int n = topology.size();
  for (int step = 0; step < n; ++step) {
    const int j = (cursor.next_index + step) % n;
    if (delay_eligible(topology.pairs[j], request) &&
        fits(states[j], topology.pairs[j], request))
      return Decision::select(j);
  }
  return Decision::reject(RejectReason::no_feasible_pair);
}

// Generic extremum selection over the feasible set. Two passes: find the
// best score, then pick uniformly among exact ties. The rng is consumed
// only when two or more pairs tie, so single-candidate decisions never
// advance the policy stream.
template <class Score, class Better>
Decision select_extremum(const Topology& topology,
                         std::span<const LspPairState> states,
                         const Request& request, RandomStream& rng,
                         Score score, Better better) {
  const int n = topology.size();
  bool found = false;
  double best = 0.0;
  int tie_count = 0;
  for (int j = 0; j < n; ++j) {
    if (!delay_eligible(topology.pairs[j], request) ||
        !fits(states[j], topology.pairs[j], request))
      continue;
    const double s = score(j);
    if (!found || better(s, best)) {
      found = true;
      best = s;
      tie_count = 1;
    } else if (s == best) {
      ++tie_count;
    }
  }
  if (!found) return Decision::reject(RejectReason::no_feasible_pair);

  std::uint64_t pick =
      tie_count > 1 ? rng.uniform_below(static_cast<std::uint64_t>(tie_count))
                    : 0;
  for (int j = 0; j < n; ++j) {
    if (!delay_eligible(topology.pairs[j], request) ||
        !fits(states[j], topology.pairs[j], request))
      continue;
    if (score(j) == best) {
      if (pick == 0) return Decision::select(j);
      --pick;
    }
  }
  require(false, "select_extremum: tie scan diverged between passes");
  return Decision::reject(RejectReason::no_feasible_pair);
}

}  // namespace

KeyDirection key_direction(const Topology& topology, const Request& request) {
  require(!topology.pairs.empty(), "key_direction: empty topology");
  double min_up = std::numeric_limits<double>::infinity();
  double min_down = std::numeric_limits<double>::infinity();
  for (const LspPairSpec& spec : topology.pairs) {
    min_up = std::min(min_up, spec.max_up);
    min_down = std::min(min_down, spec.max_down);
  }
  require(min_up > 0.0 && min_down > 0.0,
          "key_direction: a pair has zero capacity in some direction; the "
          "topology must be validated for MethodB first");
  KeyDirection key;
  key.min_max_up = min_up;
  key.min_max_down = min_down;
  key.demand_ratio_up = request.need_up / min_up;
  key.demand_ratio_down = request.need_down / min_down;
  key.direction = key.demand_ratio_up >= key.demand_ratio_down
                      ? Direction::up
                      : Direction::down;
  return key;
}

Decision select_method_a(const Topology& topology,
                         std::span<const LspPairState> states,
                         const Request& request, RoundRobinCursor& cursor) {
  const int n = topology.size();
  require(n >= 1 && cursor.next_index >= 0 && cursor.next_index < n,
          "select_method_a: cursor out of range");
  Decision decision =
      count_delay_eligible(topology, request) == 0
          ? Decision::reject(RejectReason::no_delay_feasible_pair)
          : probe_round_robin(topology, states, request, cursor);
  cursor.advance(n);
  return decision;
}

Decision select_method_b(const Topology& topology,
                         std::span<const LspPairState> states,
                         const Request& request, RandomStream& rng) {
  if (count_delay_eligible(topology, request) == 0)
    return Decision::reject(RejectReason::no_delay_feasible_pair);
  const KeyDirection key = key_direction(topology, request);
  return select_extremum(
      topology, states, request, rng,
      [&](int j) {
        const AvailableBandwidth avail =
            available(states[j], topology.pairs[j]);
        return key.direction == Direction::up ? avail.up : avail.down;
      },
      [](double a, double b) { return a < b; });
}

Decision select_method_c(const Topology& topology,
                         std::span<const LspPairState> states,
                         const Request& request, RandomStream& rng) {
  require(request.delay_constrained(),
          "select_method_c: request carries no delay bound; scenario "
          "validation must reject this");
  if (count_delay_eligible(topology, request) == 0)
    return Decision::reject(RejectReason::no_delay_feasible_pair);
  return select_extremum(
      topology, states, request, rng,
      [&](int j) { return topology.pairs[j].delay; },
      [](double a, double b) { return a > b; });
}

Decision decide(PolicyKind kind, const Topology& topology,
                std::span<const LspPairState> states, const Request& request,
                RoundRobinCursor& cursor, RandomStream& rng) {
  switch (kind) {
    case PolicyKind::method_a:
      return select_method_a(topology, states, request, cursor);
    case PolicyKind::method_b:
      return select_method_b(topology, states, request, rng);
    case PolicyKind::method_c:
      return select_method_c(topology, states, request, rng);
  }
  require(false, "decide: unknown policy kind");
  return Decision::reject(RejectReason::no_feasible_pair);
}

void validate_policy_topology(PolicyKind kind, const Topology& topology) {
  validate_topology(topology);
  if (kind != PolicyKind::method_b) return;
  for (const LspPairSpec& spec : topology.pairs) {
    check_input(spec.max_up > 0.0 && spec.max_down > 0.0,
                "policy: MethodB needs strictly positive capacity in both "
                "directions of every pair (pair " +
                    std::to_string(spec.pair_id) + " violates this)");
  }
}

}  // namespace lspsim
