#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace levinfer {

// SplitMix64 step; used for seed mixing and substream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic substream seed from a master seed and a path of counters,
// e.g. derive_seed(master, {replication, bootstrap_replicate, retry}).
// Concurrent consumers derive disjoint paths; no RNG state is shared.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = master ^ 0x5851f42d4c957f2dULL;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t step : path) {
    state ^= step + 0x9e3779b97f4a7c15ULL + (out << 6) + (out >> 2);
    out = splitmix64(state);
  }
  return out;
}

double normal_quantile(double q);  // quantiles.hpp owns the definition

// Seeded random stream. mt19937_64 gives identical sequences on every
// platform; normal deviates go through the in-house inverse CDF so draws
// are reproducible bit-for-bit given a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on the open interval (0,1): 53-bit mantissa, centered.
  double uniform01() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return normal_quantile(uniform01()); }
  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Unbiased integer in [0, n). Rejection sampling on the top of the range;
  // the acceptance region [0, bound) has size divisible by n.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x = eng_();
    while (x >= bound) x = eng_();
    return static_cast<std::size_t>(x % un);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace levinfer
