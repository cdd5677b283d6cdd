#ifndef GIANT_RNG_HPP
#define GIANT_RNG_HPP

#include <array>
#include <cstdint>

namespace giant {

/// Seeded pseudo-random stream (xoshiro256++ state, splitmix64-seeded).
///
/// A stream is fully determined by the pair (seed, stream_id): the same pair
/// yields the same u64 sequence on every run and platform. Distinct
/// stream_ids give statistically independent substreams, so replicated
/// experiments can each own a stream and be executed in any order or in
/// parallel without changing results.
///
/// A stream is single-owner: samplers advance its state, so never share one
/// instance between threads.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() {
    // xoshiro256++ by Blackman & Vigna (public domain).
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe to pass to log().
  double next_double_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound); bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    // Lemire's nearly-divisionless multiply-shift with rejection.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t cutoff = (0 - bound) % bound;
      while (lo < cutoff) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_;
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

}  // namespace giant

#endif  // GIANT_RNG_HPP
