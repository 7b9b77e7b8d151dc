#ifndef FREQINFL_RNG_HPP
#define FREQINFL_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace freqinfl {

// All randomness in this toolkit comes from std::mt19937_64, whose output
// sequence is pinned by the C++ standard, so runs reproduce bit-exactly
// across platforms. Run metadata records the name below.
inline constexpr const char* kRngName = "mt19937_64";

/// One splitmix64 step; also used to expand seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// FNV-1a over a byte string, used for stage labels and lexicon digests.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Expands one master seed into independent per-stage seeds.
///
/// stage_seed = splitmix64(splitmix64(master) ^ fnv1a64(label) ^ index)
///
/// The derivation is part of the reproducibility contract: stages (split,
/// sampler, model) can be re-run in isolation from the master seed alone.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                 std::uint64_t index = 0) {
    std::uint64_t s = master;
    std::uint64_t mixed = splitmix64(s);
    std::uint64_t t = mixed ^ fnv1a64(label) ^ index;
    return splitmix64(t);
}

/// Uniform double in [0, 1) with 53 random bits.
///
/// Hand-rolled instead of std::uniform_real_distribution, whose output is
/// implementation-defined and would break cross-platform determinism.
inline double canonical_double(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace freqinfl

#endif // FREQINFL_RNG_HPP
