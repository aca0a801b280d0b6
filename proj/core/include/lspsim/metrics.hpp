#pragma once

#include <cstdint>
#include <vector>

#include "lspsim/core.hpp"
#include "lspsim/engine.hpp"

namespace lspsim {

struct LossEstimate {
  double mean_loss = 0.0;
  double ci_halfwidth = 0.0;  // 95%, normal approximation
  int replications = 0;
  bool ci_available = false;  // needs >= 2 replications
  bool operator==(const LossEstimate&) const = default;
};

/// Mean per-replication loss with a 95% normal-approximation interval.
/// Every replication must have offered > 0.
LossEstimate loss_probability(const std::vector<RunResult>& results);

/// Every capacity multiplied by alpha, delays untouched. 0 < alpha <= 1.
Topology scale_topology(const Topology& topology, double alpha);

struct ReductionOptions {
  double alpha_lo = 0.5;
  double alpha_hi = 1.0;
  double relative_tolerance = 0.10;  // |loss - target| <= tol * target
  double min_alpha_width = 1e-3;
  int replications = 10;
  int max_replication_doublings = 2;  // when the CI straddles the target
  std::uint64_t master_seed = 0;
  int jobs = 1;
};

struct ReductionEstimate {
  double alpha_star = 1.0;  // capacity scale at which losses match
  double z_value = 0.0;     // 1 - alpha_star
  double target_loss = 0.0;
  int iterations = 0;  // test-policy evaluations performed
  bool operator==(const ReductionEstimate&) const = default;
};

/// How far the test policy's capacity can be scaled down (uniformly, by
/// alpha) before its loss climbs back to the reference policy's loss at
/// full capacity. Both policies see the same traffic (common random
/// numbers). If the test policy is not better at alpha = 1, or already
/// matches the target there, the reduction is zero.
///
/// Bisection classifies each alpha as above/below/matched against the
/// target with the relative tolerance; when the interval collapses below
/// min_alpha_width without a match, the conservative endpoint (the side
/// whose loss does not exceed the target) is returned. An evaluation whose
/// confidence interval straddles the target doubles its replication count,
/// up to max_replication_doublings, before classifying by the mean. Loss
/// must be non-increasing in alpha on the evaluated grid beyond CI noise;
/// a violation raises MonotonicityError. A lower bound whose loss is still
/// below the target cannot bracket and raises BracketingError.
ReductionEstimate equal_loss_reduction(const Scenario& scenario,
                                       PolicyKind reference_policy,
                                       PolicyKind test_policy,
                                       const ReductionOptions& options);

}  // namespace lspsim
