#pragma once

#include <cstdint>

#include "rankcop/normal.hpp"

namespace rankcop {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t v, int k) {
  return (v << k) | (v >> (64 - k));
}

}  // namespace detail

// xoshiro256++ stream seeded through splitmix64. Pure integer state, so a
// given seed yields the same sequence on every platform and build. Normal
// variates go through the inverse CDF, keeping them deterministic too.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) s = detail::splitmix64(x);
  }

  std::uint64_t seed() const { return seed_; }

  // Independent stream derived from (seed, index); stable under reordering
  // of substream requests, which keeps parallel chains reproducible.
  RngStream substream(std::uint64_t index) const {
    std::uint64_t x = seed_ ^ detail::rotl(index + 1, 32);
    std::uint64_t h = detail::splitmix64(x);
    return RngStream(h ^ detail::splitmix64(x));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result =
        detail::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  // Uniform on the open interval (0, 1): (k + 1/2) * 2^-53 with k on 53 bits,
  // so 0 and 1 are never produced and log/quantile transforms stay finite.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Uniform integer in [0, bound). Lemire multiply-shift; the O(bound/2^64)
  // bias is far below anything observable here.
  std::uint64_t uniform_int(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  double normal() { return normal_quantile(uniform01()); }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
};

}  // namespace rankcop
