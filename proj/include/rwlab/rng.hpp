#pragma once

#include <cstdint>

namespace rwlab {

// Counter-based generator: the state advances by a fixed odd constant and
// every output is a full avalanche mix of the counter (SplitMix64). Streams
// are cheap to derive, and a (master_seed, trial, stream) triple always
// yields the same sequence regardless of execution order or platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, n). Lemire rejection; do not use
    // std::uniform_int_distribution (its output is implementation-defined).
    std::uint32_t below(std::uint32_t n) {
        std::uint64_t x = next_u64() >> 32;
        std::uint64_t m = x * n;
        auto lo = static_cast<std::uint32_t>(m);
        if (lo < n) {
            std::uint32_t threshold = (0u - n) % n;
            while (lo < threshold) {
                x = next_u64() >> 32;
                m = x * n;
                lo = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    bool coin() { return (next_u64() >> 63) != 0; }

private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
} // namespace detail

// Derives an independent substream key from (master seed, trial, stream).
inline std::uint64_t substream_key(std::uint64_t master, std::uint64_t trial, std::uint64_t stream) {
    std::uint64_t k = detail::mix64(master ^ 0x6A09E667F3BCC909ull);
    k = detail::mix64(k ^ (trial * 0xD1342543DE82EF95ull + 0xA5A5A5A5A5A5A5A5ull));
    k = detail::mix64(k ^ (stream * 0x9E3779B97F4A7C15ull + 0x0123456789ABCDEFull));
    return k;
}

inline SplitMix64 substream(std::uint64_t master, std::uint64_t trial, std::uint64_t stream) {
    return SplitMix64(substream_key(master, trial, stream));
}

} // namespace rwlab
