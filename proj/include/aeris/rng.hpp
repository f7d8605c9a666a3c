#pragma once

#include <array>
#include <cstdint>

// Counter-based stream construction: every Monte-Carlo trial owns a stream
// derived purely from (seed, trial, substream), so estimates never depend on
// scheduling or worker count.
namespace aeris::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
  }

  std::uint64_t next() {
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

  // Uniform in (0,1]; never returns 0 so log() is safe.
  double uniform_pos() { return ((next() >> 11) + 1) * 0x1.0p-53; }
  // Uniform in [0,1).
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_{};
};

// Stream keyed by (seed, trial, substream).
inline Xoshiro256pp trial_stream(std::uint64_t seed, std::uint64_t trial,
                                 std::uint64_t substream = 0) {
  std::uint64_t s = seed;
  std::uint64_t mix = splitmix64(s);
  s = mix ^ (trial * 0xD1342543DE82EF95ull);
  mix = splitmix64(s);
  s = mix ^ (substream * 0x9E3779B97F4A7C15ull);
  return Xoshiro256pp(splitmix64(s));
}

}  // namespace aeris::rng
