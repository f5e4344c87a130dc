#pragma once

#include <cstdint>
#include <random>

namespace emso {

// Algorithm identifiers recorded in output files so runs can be reproduced.
inline constexpr const char* kSamplerAlgorithm = "mt19937_64/u53";
inline constexpr const char* kStreamDerivation = "splitmix64";

// splitmix64 finalizer (Steele, Lea, Flood). Used as a keyed permutation to
// derive independent per-trial seeds from (seed, index), so Monte Carlo
// results do not depend on execution order or parallelism degree.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Uniform double in [0,1) from the top 53 bits. uniform_real_distribution is
// implementation-defined, so the conversion is done by hand to keep sampled
// graphs bit-identical across platforms.
inline double u53(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace emso
