#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace psychoprobe {

// splitmix64 step; used as the documented counter-based seed splitting rule:
// stream k of master seed m is seeded with splitmix64(m + (k+1)*GOLDEN).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

// Deterministic RNG with hand-rolled variate transforms so that identical
// seeds give identical streams on every platform (std::normal_distribution
// et al. are implementation-defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform on [0,1) with 53-bit resolution
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // uniform on (0,1), safe as a log() argument
  double uniform_open() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // integer in [lo, hi] inclusive
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // standard normal, Box-Muller (second variate cached)
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Gamma(shape, 1), Marsaglia-Tsang
  double gamma(double shape);

  std::vector<double> dirichlet(const std::vector<double>& alpha);

private:
  std::mt19937_64 gen_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

} // namespace psychoprobe
