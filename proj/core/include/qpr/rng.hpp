#pragma once

#include <cstdint>
#include <random>

namespace qpr {

// Platform-independent sampling helpers. mt19937_64 output is pinned by the
// standard; the standard distributions are not, so sampling code uses these
// instead to keep seeded runs reproducible across compilers.

// Stateless mix of a base seed and a stream index (splitmix64 rounds).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi] via multiply-shift.
long long uniform_int(std::mt19937_64& gen, long long lo, long long hi);

}  // namespace qpr
