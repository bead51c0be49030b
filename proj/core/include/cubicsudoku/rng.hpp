#pragma once

#include <cstdint>
#include <limits>

namespace cubicsudoku {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Seed for substream `index` of `master`; used for per-trial and per-role streams.
constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(master ^ mix64(index + kGolden));
}

// Counter-based generator: the k-th output (k = 1, 2, ...) is mix64(seed + k * golden).
// This is exactly the SplitMix64 stream started at `seed`. Output depends only on
// (seed, counter), so streams are reproducible across platforms and compilers.
class DeterministicRandomSource {
 public:
  using result_type = std::uint64_t;

  explicit DeterministicRandomSource(std::uint64_t seed = 0) noexcept : seed_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return mix64(seed_ + (++counter_) * kGolden); }

  // Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with rejection.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // True with probability num/den (0 <= num <= den, den > 0), exact.
  bool bernoulli(std::uint64_t num, std::uint64_t den) noexcept { return uniform_below(den) < num; }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  DeterministicRandomSource substream(std::uint64_t index) const noexcept {
    return DeterministicRandomSource(substream_seed(seed_, index));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace cubicsudoku
