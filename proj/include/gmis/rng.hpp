#pragma once

#include <cstdint>

namespace gmis {

// SplitMix64 finalizer (Steele, Lea, Flood; same constants as java.util.SplittableRandom).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based random stream. A stream is fully determined by
// (master_seed, stream_index): the i-th output is
//
//   mix64(base + i * 0x9E3779B97F4A7C15)  with
//   base = mix64(master_seed ^ (0x9E3779B97F4A7C15 * (stream_index + 1)))
//
// Pure 64-bit integer arithmetic, so sequences are identical across
// platforms. Distinct stream indices give statistically independent
// streams without shared state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0)
      : base_(mix64(master_seed ^ (kGolden * (stream_index + 1)))) {}

  std::uint64_t next_u64() { return mix64(base_ + (++counter_) * kGolden); }

  // Unbiased integer in [0, bound), bound >= 1 (Lemire's multiply-shift with rejection).
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace gmis
