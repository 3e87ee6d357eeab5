#pragma once

#include <cmath>
#include <cstdint>

namespace hdcr {

// SplitMix64 (Steele, Lea, Flood 2014). Used both as the per-vector generator
// and as the seed mixer, so every stream in the library is reproducible from
// a single 64-bit seed.

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Sub-seed for stream index i under a master seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64_finalize(seed ^ index);
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    constexpr std::uint64_t next() noexcept {
        state_ += kGoldenGamma;
        return splitmix64_finalize(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on [-1, 1]; endpoints occur with probability 2^-53.
    double uniform_pm1() noexcept { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-52 - 1.0; }

    /// Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = -bound % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = next();
            if (x >= limit) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Standard normal variates by the Marsaglia polar method over a SplitMix64
/// stream. Each accepted pair yields two variates, the second one cached.
class NormalGenerator {
public:
    explicit NormalGenerator(std::uint64_t seed) noexcept : rng_(seed) {}

    double operator()() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = rng_.uniform_pm1();
            v = rng_.uniform_pm1();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace hdcr
