#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gsbv {

// Counter-based generator: every (seed, counter) pair maps to an independent
// 64-bit word through a SplitMix64-style finalizer. Sample i of a Monte Carlo
// run is a pure function of (seed, i), so outputs are bit-reproducible and
// independent of evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t word(std::uint64_t counter) const {
    std::uint64_t z = seed_ ^ (0x9E3779B97F4A7C15ull * (counter + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in the open interval (0, 1)
  double uniform(std::uint64_t counter) const {
    return (static_cast<double>(word(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  // standard normal via Box-Muller; counter k consumes words 2k and 2k+1
  double normal(std::uint64_t counter) const {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace gsbv
