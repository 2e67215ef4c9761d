#pragma once

#include <cstdint>

namespace refnet {

// SplitMix64 step. Used for state seeding and for the documented
// replicate fan-out rule: stream k of master seed s is an Rng whose
// state words are the first four SplitMix64 outputs after mixing
// s with k (see Rng::stream).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman/Vigna). Deterministic for a given seed on any
// platform; one instance per worker, never shared across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
    }

    // Independent stream for replicate `index` under `master` seed.
    static Rng stream(std::uint64_t master, std::uint64_t index) {
        std::uint64_t sm = master;
        std::uint64_t base = splitmix64(sm) ^ (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL);
        return Rng(base);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), unbiased.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = n * (~std::uint64_t{0} / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace refnet
