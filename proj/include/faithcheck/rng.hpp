#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace faithcheck {

// All randomized components draw through these helpers so that a seed fully
// determines the byte content of emitted traces on any platform. mt19937_64
// output is specified by the standard; the distributions below avoid
// std::uniform_*_distribution, whose streams are implementation-defined.
inline constexpr const char* kGeneratorName = "mt19937_64/v1";

using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream for (seed, stream); streams for (seed, a) and (seed, b)
// never collide for a != b.
inline Rng make_rng(uint64_t seed, uint64_t stream = 0) {
    return Rng(splitmix64(seed ^ splitmix64(stream)));
}

// Uniform in [0,1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Multiply-shift; bias is < n/2^64, irrelevant at
// our scales, and the mapping is deterministic.
inline uint64_t uniform_below(Rng& rng, uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(rng()) * n) >> 64);
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

// Sampler for a fixed discrete distribution via cumulative binary search.
class DiscreteSampler {
public:
    explicit DiscreteSampler(const std::vector<double>& weights);
    int draw(Rng& rng) const;

private:
    std::vector<double> cumulative_;
};

}  // namespace faithcheck
