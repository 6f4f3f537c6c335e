#pragma once

// splitmix64: the fixed, named generator behind every experiment report.
// Per-trial streams are derived from (seed, trial), so trials can run in
// any order or concurrently without changing results.

#include <cstdint>

namespace mgx {

inline constexpr const char* kRngId = "splitmix64";

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t bounded(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }
};

inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 mix(seed);
    std::uint64_t a = mix.next();
    return SplitMix64(a ^ (trial * 0xD6E8FEB86659FD93ULL));
}

}  // namespace mgx
