#ifndef EMSIM_TEST_HELPERS_HPP
#define EMSIM_TEST_HELPERS_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "emsim/bitword.hpp"
#include "emsim/cipher.hpp"
#include "emsim/galois.hpp"

namespace emsim::testing {

inline PermTable random_permutation(int n, std::mt19937_64& gen) {
    std::vector<std::uint16_t> table(size_t{1} << n);
    std::iota(table.begin(), table.end(), 0);
    for (size_t i = table.size(); i > 1; --i)
        std::swap(table[i - 1], table[gen() % i]);
    return PermTable(n, std::move(table));
}

inline BitWord random_word(int n, std::mt19937_64& gen) {
    return BitWord(n, static_cast<std::uint32_t>(gen() & ((1u << n) - 1)));
}

/// f(x) = P(x^k1) ^ P(x) has a second exact period besides k1. Such
/// instances break Simon's promise outright: the sample support spans less
/// than n-1 dimensions and no algorithm can identify k1.
inline bool has_extra_period(const PermTable& p, const BitWord& k1) {
    const std::uint32_t size = p.size();
    const std::uint32_t k = k1.bits();
    std::vector<std::uint32_t> f(size);
    for (std::uint32_t x = 0; x < size; ++x) f[x] = static_cast<std::uint32_t>(p[x ^ k] ^ p[x]);
    for (std::uint32_t t = 1; t < size; ++t) {
        if (t == k) continue;
        bool period = true;
        for (std::uint32_t x = 0; x < size && period; ++x) period = f[x] == f[x ^ t];
        if (period) return true;
    }
    return false;
}

/// Random instance satisfying Simon's promise for k1 recovery: either k1 = 0
/// (constant f) or no extra exact period. Needs n >= 3: at n = 2 the coset
/// values of f XOR to zero, so every instance with k1 != 0 has constant f
/// and the promise never holds.
inline EmInstance random_promise_instance(int n, std::mt19937_64& gen,
                                          bool allow_zero_k1 = true) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        PermTable p = random_permutation(n, gen);
        BitWord k1 = random_word(n, gen);
        BitWord k2 = random_word(n, gen);
        if (k1.is_zero() && !allow_zero_k1) continue;
        if (!k1.is_zero() && has_extra_period(p, k1)) continue;
        return EmInstance(std::move(p), EmKey(k1, k2));
    }
    throw std::runtime_error("no promise instance found at n=" + std::to_string(n));
}

/// Independent brute-force period solve: scan every nonzero candidate.
inline std::vector<std::uint32_t> orthogonal_candidates(const std::vector<BitWord>& rows, int n) {
    std::vector<std::uint32_t> hits;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        bool ok = true;
        for (const BitWord& r : rows)
            if (dot(r, BitWord(n, s)) != 0) { ok = false; break; }
        if (ok) hits.push_back(s);
    }
    return hits;
}

}  // namespace emsim::testing

#endif
