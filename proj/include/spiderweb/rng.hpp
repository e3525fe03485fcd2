#pragma once

#include <cstdint>

namespace spiderweb {

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

// Counter-based generator: value n of stream s under seed depends only on
// (seed, s, n), so draws can be consumed in any order and partitioned over
// threads without changing the result.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix64(seed + mix64(stream * GOLDEN))) {}

    std::uint64_t at(std::uint64_t n) const { return mix64(key_ + (n + 1) * GOLDEN); }

    // uniform in [0, 1), 53 random bits
    double uniform_at(std::uint64_t n) const {
        return static_cast<double>(at(n) >> 11) * 0x1.0p-53;
    }

  private:
    static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;
    std::uint64_t key_;
};

}  // namespace spiderweb
