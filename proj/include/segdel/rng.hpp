// Minimal deterministic PRNG. splitmix64 keeps draws identical across
// compilers and standard libraries, which the reproducibility contracts need.
#ifndef SEGDEL_RNG_HPP
#define SEGDEL_RNG_HPP

#include <cstdint>

namespace segdel {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform in [0, 1).
    double unit_real() { return double(next() >> 11) * 0x1.0p-53; }

    /// Independent stream for sub-task k (per-trial determinism regardless of
    /// evaluation order).
    SplitMix64 split(std::uint64_t k) const {
        SplitMix64 child(state_ ^ (0xd1b54a32d192ed03ull * (k + 1)));
        child.next();
        return child;
    }

  private:
    std::uint64_t state_;
};

}  // namespace segdel

#endif
