#include "lspsim/rng.hpp"

#include <cmath>
#include <numbers>

#include "lspsim/errors.hpp"

namespace lspsim {

std::uint64_t RandomStream::uniform_below(std::uint64_t n) {
  require(n >= 1, "uniform_below: n must be >= 1");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t raw;
  do {
    raw = gen_();
  } while (raw >= limit);
  return raw % n;
}

double RandomStream::exponential(double mean) {
  require(mean > 0.0, "exponential: mean must be positive");
  double u;
  do {
    u = uniform01();
  } while (u <= 0.0);
  return -mean * std::log(u);
}

double RandomStream::normal(double mean, double stddev) {
  double u1;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  const double u2 = uniform01();
  const double z =
      std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

namespace {

// splitmix64 finalizer; full-avalanche mixing for seed derivation.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) {
  return mix64(mix64(mix64(master) ^ stream) ^ index);
}

}  // namespace lspsim
