#ifndef HEFDIV_PRNG_HPP
#define HEFDIV_PRNG_HPP

#include <cstdint>

namespace hefdiv {

// splitmix64: tiny deterministic generator. Used for every random choice in
// the toolkit (surjectivity probes, corpus generation, property tests) so
// that seeded runs are bit-reproducible across platforms; std::mt19937 plus
// the standard distributions would not guarantee that.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

} // namespace hefdiv

#endif
