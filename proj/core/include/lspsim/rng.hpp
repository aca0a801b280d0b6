#pragma once

#include <cstdint>
#include <random>

namespace lspsim {

/// Deterministic random stream used by all stochastic parts of the toolkit.
///
/// mt19937_64 output is fully specified by the standard, but the standard
/// *distributions* are not, so every transform here is open-coded. Sequences
/// are therefore bit-identical for a given seed on any conforming platform,
/// which is what makes frozen test values and common-random-number
/// comparisons across policies trustworthy.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Exponential with the given mean. Strictly positive.
  double exponential(double mean);

  /// Gaussian via Box-Muller. One variate per call, no cached spare, so
  /// stream consumption does not depend on call history.
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 gen_;
};

/// Stream roles for seed derivation. Replication r of a run with master seed
/// m draws traffic from derive_seed(m, kTrafficStream, r) and policy
/// tie-breaks from derive_seed(m, kPolicyStream, r). Traffic traces are thus
/// identical across policies and capacity scales under a shared master seed
/// (common random numbers).
inline constexpr std::uint64_t kTrafficStream = 1;
inline constexpr std::uint64_t kPolicyStream = 2;

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index);

}  // namespace lspsim
