#ifndef EMSIM_ATTACK_HPP
#define EMSIM_ATTACK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "emsim/cipher.hpp"
#include "emsim/distribution.hpp"
#include "emsim/rational.hpp"

namespace emsim {

enum class Strategy { Streaming, TopHalf };

struct AttackConfig {
    PermTable lut;
    EmKey true_key;            // drives the simulated encryption oracle
    Strategy strategy = Strategy::Streaming;
    std::uint64_t shots = 100000;    // top-half sample budget
    std::uint64_t max_shots = 512;   // streaming cap
    int margin_r = 16;               // extra queries past n
    Rational noise_p{0, 1};          // mixture weight towards uniform
    std::uint64_t seed = 0;
    std::optional<BitWord> k2_message;  // defaults to the zero word
    bool noisy_k2 = false;           // draw k2 observations through the mixture
    std::uint64_t k2_shots = 1000;   // only used when noisy_k2

    int n() const { return lut.n(); }
};

struct AttackResult {
    BitWord recovered_k1;
    BitWord recovered_k2;
    std::uint64_t shots_used = 0;
    std::vector<int> rank_trajectory;  // rank after each consumed sample
    bool success = false;              // both keys equal the configured truth
    bool verified = false;             // oracle match on every plaintext
    Distribution samples;              // raw Simon-side counts
};

/// Draws samples until the period is decided. From sample n+r onward: rank
/// n-1 solves for the unique nonzero period, and rank still 0 (every sample
/// was the zero word, the interference signature of a constant f) reports
/// period 0. Rank n also reports period 0; that needs a noise-corrupted
/// stream. Throws ShotBudgetExhausted at max_shots.
BitWord streaming_recover_k1(const std::function<BitWord()>& sampler, int n,
                             std::uint64_t max_shots, int r,
                             std::vector<int>* rank_trajectory = nullptr,
                             std::uint64_t* shots_used = nullptr);

/// Takes the 2^(n-1) most frequent outcomes (ties to the smaller value),
/// adds them most-frequent-first until rank n-1, then solves. Throws
/// InsufficientRank if the top half spans fewer than n-1 dimensions.
BitWord top_half_recover_k1(const Distribution& counts, int n);

/// True iff P(x ^ k1) ^ k2 == oracle(x) for every plaintext.
bool verify_keys(const PermTable& lut, const BitWord& k1, const BitWord& k2,
                 const EncryptionOracle& oracle);

/// The full two-step attack: sample Simon outcomes through the configured
/// noise, recover k1 per strategy, derive k2 from one oracle query, verify.
AttackResult run_attack(const AttackConfig& cfg);

}  // namespace emsim

#endif
