#include "qpr/rng.hpp"

namespace qpr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(splitmix64(base) ^ (index + 1) * 0x9E3779B97F4A7C15ULL);
}

long long uniform_int(std::mt19937_64& gen, long long lo, long long hi) {
    const auto range = static_cast<unsigned long long>(hi - lo + 1);
    const auto scaled = static_cast<unsigned long long>(
        (static_cast<unsigned __int128>(gen()) * range) >> 64);
    return lo + static_cast<long long>(scaled);
}

}  // namespace qpr
