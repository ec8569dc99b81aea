#ifndef EMSIM_RNG_HPP
#define EMSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace emsim {

// All randomness flows from one master seed. Sub-streams are derived by
// hashing a label (FNV-1a) into the seed and finalizing with SplitMix64,
// so independent stages (sampling, noise, trials) never share state.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t derive(std::uint64_t master, std::string_view label, std::uint64_t index = 0) {
    return splitmix64(master ^ splitmix64(fnv1a(label) + index));
}

inline std::mt19937_64 stream(std::uint64_t master, std::string_view label, std::uint64_t index = 0) {
    return std::mt19937_64(derive(master, label, index));
}

/// Uniform double in [0,1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, 2^bits) from the top bits of one draw.
inline std::uint32_t uniform_pow2(std::mt19937_64& g, int bits) {
    return static_cast<std::uint32_t>(g() >> (64 - bits));
}

}  // namespace rng
}  // namespace emsim

#endif
