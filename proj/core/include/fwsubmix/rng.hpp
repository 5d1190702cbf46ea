#pragma once

#include <cstdint>

namespace fwsubmix {

/// SplitMix64 finalizer. Bijective mix of a 64-bit word.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Key for the `index`-th random stream belonging to `seed`.
///   key = splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019))
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) noexcept;

/// Counter-based generator: draw k of a stream with key K is
///   splitmix64(K + (k + 1) * 0x9E3779B97F4A7C15).
/// Every draw is a pure function of (key, counter), so streams are trivially
/// reproducible from other languages.
///
/// uniform(a, b) maps the top 53 bits to [0, 1) and then to [a, b).
/// normal() is Box-Muller on two consecutive uniforms u1, u2 using
/// sqrt(-2 ln(1 - u1)) * cos(2 pi u2); the sine branch is discarded.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept : key_(stream_key(seed, stream)) {}

  std::uint64_t next_u64() noexcept;
  double uniform01() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }
  double normal() noexcept;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace fwsubmix
