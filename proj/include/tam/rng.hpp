#pragma once

#include <cstdint>

namespace tam {

// splitmix64: 64-bit splittable generator, bit-identical across platforms.
// The seed is recorded in every output artifact so runs replay exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased bounded draw (rejection sampling).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dULL); }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace tam
