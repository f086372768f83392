#pragma once

#include <cmath>
#include <cstdint>

namespace annustitch {

/// SplitMix64. Used wherever the pipeline needs seed-derived, counter
/// addressable randomness (RANSAC hypothesis streams, phantom noise) so
/// results are reproducible regardless of how work is scheduled.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        return next() % bound;
    }

    /// Standard normal via Box-Muller; no library distribution so the
    /// stream is pinned across standard library implementations.
    double next_gaussian() {
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    std::uint64_t state_;
};

/// Mixes a stream index into a base seed; distinct indices give independent
/// looking streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    SplitMix64 mixer(base ^ (0xA0761D6478BD642FULL * (stream + 1)));
    return mixer.next();
}

} // namespace annustitch
