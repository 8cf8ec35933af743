// Counter-based uniform streams (splitmix64 finalizer). A draw is a pure
// function of (seed, stream, counter), so simulation cells can be evaluated
// in any order or split across threads without changing a single draw.
#pragma once

#include <cstdint>

namespace screenlab::rng {

inline constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t stream_id)
        : base_(mix64(seed ^ mix64(golden_gamma * (stream_id + 1)))) {}

    // value in [0, 1), 53-bit resolution
    double uniform(std::uint64_t counter) const {
        const std::uint64_t z = mix64(base_ + golden_gamma * (counter + 1));
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t base_;
};

}  // namespace screenlab::rng
