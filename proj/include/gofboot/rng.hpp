#pragma once

#include <cstddef>
#include <cstdint>

namespace gofboot {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of substream `index` under `master`. Depends only on the pair, so a
/// unit of work draws the same numbers whichever thread runs it.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(mix64(master ^ 0x6A09E667F3BCC909ULL) + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// SplitMix64 stream with the handful of draws the library needs.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept : state_(seed) {}

    RngStream(std::uint64_t master, std::uint64_t index) noexcept
        : state_(derive_seed(master, index)) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
    std::size_t below(std::size_t bound) noexcept;

    /// Standard normal via the Marsaglia polar method; the spare deviate is kept.
    double normal() noexcept;

    double normal(double mean, double sd) noexcept { return mean + sd * normal(); }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace gofboot
