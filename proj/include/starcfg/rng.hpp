#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace starcfg {

/// splitmix64 finalizer. Spreads one user-facing seed into independent
/// per-task streams; every run with the same flags replays bit-identically.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for sub-task `stream` of a computation seeded with `base`.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix_seed(base + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

/// mt19937_64 plus a rejection-sampled bounded draw, so the value stream is
/// pinned by the standard and identical on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [lo, hi], both ends included.
    long uniform(long lo, long hi) {
        if (lo >= hi) return lo;
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t mask = std::bit_ceil(range) - 1;
        for (;;) {
            const std::uint64_t v = gen_() & mask;
            if (v < range) return lo + static_cast<long>(v);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace starcfg
