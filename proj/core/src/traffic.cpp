#include "lspsim/traffic.hpp"

#include "lspsim/errors.hpp"

namespace lspsim {

void validate_pattern(const DemandPattern& pattern) {
  check_input(!pattern.entries.empty(), "demand pattern must be non-empty");
  for (std::size_t i = 0; i < pattern.entries.size(); ++i) {
    const auto& e = pattern.entries[i];
    check_input(e.mean_up >= 0.0 && e.mean_down >= 0.0,
                "demand pattern entry " + std::to_string(i) +
                    " has a negative mean");
    check_input(e.mean_up > 0.0 || e.mean_down > 0.0,
                "demand pattern entry " + std::to_string(i) +
                    " is zero in both directions");
  }
  check_input(pattern.sigma_ratio >= 0.0, "sigma_ratio must be >= 0");
}

void validate_arrivals(const ArrivalProcess& process) {
  check_input(process.mean_interarrival > 0.0,
              "mean_interarrival must be > 0");
  check_input(process.holding_time > 0.0, "holding_time must be > 0");
}

void validate_mix(const DelayClassMix& mix) {
  check_input(mix.short_fraction >= 0.0 && mix.short_fraction <= 1.0,
              "short_fraction must lie in [0, 1]");
  check_input(mix.short_permitted > 0.0 && mix.long_permitted > 0.0,
              "permitted delays must be > 0");
  check_input(mix.short_permitted <= mix.long_permitted,
              "short_permitted must not exceed long_permitted");
}

Request generate_request(const DemandPattern& pattern,
                         const DelayClassMix* mix, std::int64_t index,
                         double clock, RandomStream& rng) {
  require(index >= 0, "request index must be non-negative");
  require(!pattern.entries.empty(), "demand pattern must be non-empty");

  const auto& means = pattern.entries[static_cast<std::size_t>(
      index % static_cast<std::int64_t>(pattern.entries.size()))];

  Request req;
  req.req_id = index;
  req.arrival_time = clock;
  req.need_up = draw_demand_size(means.mean_up, pattern.sigma_ratio, rng);
  req.need_down = draw_demand_size(means.mean_down, pattern.sigma_ratio, rng);
  if (mix != nullptr) {
    req.permitted_delay = rng.uniform01() < mix->short_fraction
                              ? mix->short_permitted
                              : mix->long_permitted;
  } else {
    req.permitted_delay = kUnconstrainedDelay;
  }
  return req;
}

double next_arrival(double clock, const ArrivalProcess& process,
                    RandomStream& rng) {
  return clock + rng.exponential(process.mean_interarrival);
}

}  // namespace lspsim
