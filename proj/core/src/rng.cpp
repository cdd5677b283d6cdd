#include "giant/rng.hpp"

namespace giant {
namespace {

// splitmix64 finalizer; used only for seeding.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  // Hash the pair so that nearby (seed, stream_id) values land far apart.
  std::uint64_t h = mix64(seed) ^ mix64(mix64(stream_id) + 0x632BE59BD9B4E019ULL);
  state_[0] = mix64(h + 1);
  state_[1] = mix64(h + 2);
  state_[2] = mix64(h + 3);
  state_[3] = mix64(h + 4);
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

}  // namespace giant
