#pragma once

#include <cmath>
#include <cstdint>

namespace subsketch {

// SplitMix64 finalizer (public-domain constants by Sebastiano Vigna):
// xor-shift-multiply with 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB and
// shifts 30/27/31. Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derives the key of an independent substream from a parent key and a salt
// (trial index, grid position, role tag...). Splitting is pure arithmetic,
// so streams are reproducible no matter which thread draws from them.
inline std::uint64_t derive_stream(std::uint64_t key, std::uint64_t salt) noexcept {
    return mix64(key + mix64(salt));
}

// Counter-based generator: word i of stream `key` is mix64(key + i*golden).
// No hidden state beyond the counter, so any position is addressable and
// streams with distinct keys never need coordination.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    std::uint64_t next_u64() noexcept { return mix64(key_ + 0x9E3779B97F4A7C15ULL * counter_++); }

    // Uniform on (0, 1]; never returns 0 so log() downstream is safe.
    double uniform01() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; both outputs of each transform are used.
    double gaussian() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace subsketch
