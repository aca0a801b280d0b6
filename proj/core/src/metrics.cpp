#include "lspsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "lspsim/errors.hpp"

namespace lspsim {

LossEstimate loss_probability(const std::vector<RunResult>& results) {
  check_input(!results.empty(), "loss_probability: no replications");
  std::vector<double> losses;
  losses.reserve(results.size());
  for (const RunResult& r : results) {
    check_input(r.offered > 0,
                "loss_probability: a replication offered no requests");
    losses.push_back(r.loss());
  }
  const int n = static_cast<int>(losses.size());

  LossEstimate est;
  est.replications = n;
  double sum = 0.0;
  for (double v : losses) sum += v;
  est.mean_loss = sum / n;

  if (n >= 2) {
    double ss = 0.0;
    for (double v : losses) ss += (v - est.mean_loss) * (v - est.mean_loss);
    const double stddev = std::sqrt(ss / (n - 1));
    est.ci_halfwidth = 1.96 * stddev / std::sqrt(static_cast<double>(n));
    est.ci_available = true;
  }
  return est;
}

Topology scale_topology(const Topology& topology, double alpha) {
  check_input(alpha > 0.0 && alpha <= 1.0,
              "scale_topology: alpha must lie in (0, 1]");
  Topology scaled = topology;
  for (LspPairSpec& spec : scaled.pairs) {
    spec.max_up *= alpha;
    spec.max_down *= alpha;
  }
  return scaled;
}

namespace {

enum class Fit { matched, above, below };

// Evaluates the test policy's loss at one capacity scale, doubling the
// replication count while the point estimate's CI straddles the target
// without the mean settling inside the tolerance band.
class ScaledLossEvaluator {
 public:
  ScaledLossEvaluator(const Scenario& base, PolicyKind policy,
                      const ReductionOptions& options, double target)
      : base_(base), policy_(policy), options_(options), target_(target) {}

  LossEstimate evaluate(double alpha) {
    int reps = options_.replications;
    LossEstimate est = evaluate_with(alpha, reps);
    for (int d = 0; d < options_.max_replication_doublings; ++d) {
      if (classify(est) == Fit::matched || !straddles(est)) break;
      reps *= 2;
      est = evaluate_with(alpha, reps);
    }
    record(alpha, est);
    return est;
  }

  Fit classify(const LossEstimate& est) const {
    if (std::abs(est.mean_loss - target_) <=
        options_.relative_tolerance * target_)
      return Fit::matched;
    return est.mean_loss > target_ ? Fit::above : Fit::below;
  }

  int iterations() const { return iterations_; }

 private:
  LossEstimate evaluate_with(double alpha, int reps) {
    ++iterations_;
    Scenario scaled = base_;
    scaled.policy = policy_;
    scaled.topology = scale_topology(base_.topology, alpha);
    scaled.record_decisions = false;
    const std::vector<RunResult> results = run_replications(
        scaled, reps, options_.master_seed, options_.jobs);
    return loss_probability(results);
  }

  bool straddles(const LossEstimate& est) const {
    return est.ci_available &&
           std::abs(est.mean_loss - target_) < est.ci_halfwidth;
  }

  // Loss is non-increasing in alpha under common random numbers; allow the
  // combined CI halfwidths as noise before declaring a violation.
  void record(double alpha, const LossEstimate& est) {
    for (const auto& [a, e] : grid_) {
      const double slack = e.ci_halfwidth + est.ci_halfwidth;
      const bool violated = a < alpha ? e.mean_loss < est.mean_loss - slack
                                      : e.mean_loss > est.mean_loss + slack;
      if (violated)
        throw MonotonicityError(
            "loss(alpha=" + std::to_string(alpha) + ") = " +
            std::to_string(est.mean_loss) + " vs loss(alpha=" +
            std::to_string(a) + ") = " + std::to_string(e.mean_loss) +
            " breaks monotonicity beyond CI noise; raise the replication "
            "count");
    }
    grid_.emplace(alpha, est);
  }

  const Scenario& base_;
  PolicyKind policy_;
  const ReductionOptions& options_;
  double target_;
  int iterations_ = 0;
  std::map<double, LossEstimate> grid_;
};

}  // namespace

ReductionEstimate equal_loss_reduction(const Scenario& scenario,
                                       PolicyKind reference_policy,
                                       PolicyKind test_policy,
                                       const ReductionOptions& options) {
  check_input(options.alpha_lo > 0.0 && options.alpha_lo < options.alpha_hi &&
                  options.alpha_hi <= 1.0,
              "equal_loss_reduction: need 0 < alpha_lo < alpha_hi <= 1");
  check_input(options.replications >= 1,
              "equal_loss_reduction: replications must be >= 1");
  check_input(options.relative_tolerance >= 0.0,
              "equal_loss_reduction: tolerance must be >= 0");

  Scenario reference = scenario;
  reference.policy = reference_policy;
  reference.record_decisions = false;
  const LossEstimate target_est = loss_probability(run_replications(
      reference, options.replications, options.master_seed, options.jobs));
  const double target = target_est.mean_loss;

  ScaledLossEvaluator eval(scenario, test_policy, options, target);

  ReductionEstimate reduction;
  reduction.target_loss = target;

  const LossEstimate at_full = eval.evaluate(options.alpha_hi);
  if (eval.classify(at_full) != Fit::below) {
    // Not better than the reference at full capacity: nothing to trade away.
    reduction.alpha_star = options.alpha_hi;
    reduction.z_value = 1.0 - reduction.alpha_star;
    reduction.iterations = eval.iterations();
    return reduction;
  }

  const LossEstimate at_lo = eval.evaluate(options.alpha_lo);
  if (eval.classify(at_lo) == Fit::below)
    throw BracketingError(
        "equal_loss_reduction: loss at alpha_lo = " +
        std::to_string(options.alpha_lo) + " is " +
        std::to_string(at_lo.mean_loss) + ", still below the target " +
        std::to_string(target) + "; widen the bounds (lower alpha_lo)");
  if (eval.classify(at_lo) == Fit::matched) {
    reduction.alpha_star = options.alpha_lo;
    reduction.z_value = 1.0 - reduction.alpha_star;
    reduction.iterations = eval.iterations();
    return reduction;
  }

  double lo = options.alpha_lo;  // loss above target here
  double hi = options.alpha_hi;  // loss below target here
  double alpha_star = hi;
  while (hi - lo >= options.min_alpha_width) {
    const double mid = 0.5 * (lo + hi);
    const LossEstimate at_mid = eval.evaluate(mid);
    const Fit fit = eval.classify(at_mid);
    if (fit == Fit::matched) {
      alpha_star = mid;
      break;
    }
    if (fit == Fit::above)
      lo = mid;
    else
      hi = mid;
    alpha_star = hi;  // the side whose loss does not exceed the target
  }

  reduction.alpha_star = alpha_star;
  reduction.z_value = 1.0 - alpha_star;
  reduction.iterations = eval.iterations();
  return reduction;
}

}  // namespace lspsim
