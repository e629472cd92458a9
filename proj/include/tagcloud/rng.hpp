#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace tagcloud {

/// Seeded generator used everywhere randomness appears. The bounded draw and
/// shuffle below are written out so sequences do not depend on the standard
/// library's distribution implementations.
using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64";

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
    std::uint64_t draw = rng();
    while (draw > limit) draw = rng();
    return draw % bound;
}

/// Fisher-Yates, from the back.
template <typename T>
void shuffle_in_place(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

/// splitmix64 finalizer; turns (seed, stream) into an independent seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace tagcloud
