#pragma once

#include <cstdint>
#include <random>

namespace ricci {

// Seedable PRNG with a portable bounded-draw helper. std::uniform_int_distribution
// is implementation-defined, so bounded draws go through rejection sampling to keep
// outputs reproducible for a given seed.
class rng {
  public:
    explicit rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform value in [0, n). n must be >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Derive an independent child seed; used to fan out per-trial generators.
    std::uint64_t fork_seed() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used for stable per-edge random ranks.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace ricci
