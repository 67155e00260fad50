#ifndef HGBS_RNG_HPP
#define HGBS_RNG_HPP

#include <cstdint>
#include <random>

namespace hgbs {

/// SplitMix64 finalizer. Used to derive independent sub-seeds from a master
/// seed; part of the persisted-deployment format contract, so the constants
/// and structure here must never change between versions.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Sub-seed for stream `index` of domain `domain` under `master`.
/// sub_seed(master, o, g) seeds the generator for the order-o polynomial
/// with grid index g; sub_seed(seed, 0, trial) seeds Monte Carlo trials.
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t domain,
                              std::uint64_t index) noexcept {
    return mix64(mix64(master ^ domain * 0xA24BAED4963EE407ull) ^
                 index * 0x9FB21C651E98DF25ull);
}

/// Unbiased uniform draw from [0, bound) by rejection sampling.
/// std::mt19937_64 output is fully specified by the standard and
/// this mapping avoids the implementation-defined
/// std::uniform_int_distribution, so draws are stable across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    std::uint64_t r;
    do {
        r = gen();
    } while (r < threshold);
    return r % bound;
}

} // namespace hgbs

#endif // HGBS_RNG_HPP
