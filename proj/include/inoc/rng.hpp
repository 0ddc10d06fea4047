#pragma once

#include <cstdint>

namespace inoc {

// Counter-based generator built on the SplitMix64 finalizer.
//
// Stream k of a run seeded with s starts from mix(s + GOLDEN * (k + 1)) and
// advances by the usual SplitMix64 increment. Every Monte Carlo sample draws
// its own stream from (seed, sample index), so results are identical for a
// fixed seed no matter how samples are scheduled across threads.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static CounterRng for_sample(std::uint64_t seed, std::uint64_t k) {
    return CounterRng(mix(seed + kGolden * (k + 1)));
  }

  explicit CounterRng(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). Modulo bias is below 2^-50 for n < 2^14 and is
  // irrelevant at the instance sizes this library targets.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace inoc
