#pragma once

#include <cstdint>
#include <vector>

#include "lspsim/core.hpp"
#include "lspsim/rng.hpp"

namespace lspsim {

struct DemandMeans {
  double mean_up = 0.0;
  double mean_down = 0.0;
  bool operator==(const DemandMeans&) const = default;
};

/// Cyclic demand sizes: request i draws around entries[i mod k]. The
/// standard deviation of each draw is sigma_ratio times its mean, so
/// sigma_ratio == 0 reproduces the pattern exactly.
struct DemandPattern {
  std::vector<DemandMeans> entries;
  double sigma_ratio = 0.1;
  bool operator==(const DemandPattern&) const = default;
};

struct ArrivalProcess {
  double mean_interarrival = 1.0;  // r
  double holding_time = 1.0;       // H, constant per run
  bool operator==(const ArrivalProcess&) const = default;
};

/// Two delay classes: a request gets the short bound with probability
/// short_fraction, the long bound otherwise.
struct DelayClassMix {
  double short_fraction = 0.0;  // S
  double short_permitted = 0.0;
  double long_permitted = 0.0;
  bool operator==(const DelayClassMix&) const = default;
};

void validate_pattern(const DemandPattern& pattern);
void validate_arrivals(const ArrivalProcess& process);
void validate_mix(const DelayClassMix& mix);

inline constexpr int kMaxSizeRedraws = 100;

/// One non-negative demand size: Gaussian, redrawn while negative (at most
/// kMaxSizeRedraws extra draws), then clamped to zero.
template <class Rng>
double draw_demand_size(double mean, double sigma_ratio, Rng& rng) {
  const double stddev = sigma_ratio * mean;
  double size = rng.normal(mean, stddev);
  for (int redraw = 0; redraw < kMaxSizeRedraws && size < 0.0; ++redraw)
    size = rng.normal(mean, stddev);
  return size < 0.0 ? 0.0 : size;
}

/// Builds request number `index` arriving at `clock`. Stream consumption
/// order is fixed: upward size, downward size, then (with a mix) one uniform
/// for the delay class. Without a mix the request is delay-unconstrained.
Request generate_request(const DemandPattern& pattern,
                         const DelayClassMix* mix, std::int64_t index,
                         double clock, RandomStream& rng);

/// Next arrival instant: clock plus an exponential gap with mean r.
/// Strictly greater than clock.
double next_arrival(double clock, const ArrivalProcess& process,
                    RandomStream& rng);

}  // namespace lspsim
