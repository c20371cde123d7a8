#ifndef SYTPOLY_RNG_HPP
#define SYTPOLY_RNG_HPP

#include <cstdint>

namespace sytpoly {

// SplitMix64. Seeded runs must be byte-identical across platforms, which
// rules out std distributions; the generator and the bounded draw below are
// fully pinned down.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [lo, hi]; modulo bias is irrelevant at the ranges
    /// used here and keeps the stream reproducible.
    long long next_in(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace sytpoly

#endif
