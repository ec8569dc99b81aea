#include "emsim/attack.hpp"

#include <algorithm>

#include "emsim/f2linalg.hpp"
#include "emsim/noise.hpp"
#include "emsim/qsim.hpp"
#include "emsim/rng.hpp"

namespace emsim {

BitWord streaming_recover_k1(const std::function<BitWord()>& sampler, int n,
                             std::uint64_t max_shots, int r,
                             std::vector<int>* rank_trajectory,
                             std::uint64_t* shots_used) {
    if (max_shots < static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(r))
        throw InvalidArgument("max_shots must be at least n + r");
    EquationSet eqs(n);
    std::uint64_t shots = 0;
    while (shots < max_shots) {
        eqs.add_row(sampler());
        ++shots;
        if (rank_trajectory) rank_trajectory->push_back(eqs.rank());
        if (shots_used) *shots_used = shots;
        // Full rank means the samples are not orthogonal to any fixed
        // period; only a noisy stream can get here.
        if (eqs.rank() == n) return BitWord::zero(n);
        if (shots >= static_cast<std::uint64_t>(n + r)) {
            if (eqs.rank() == n - 1) return eqs.solve_period();
            // Constant f (period 0) interferes every shot back to the zero
            // outcome, so an all-zero sample record is the k1 = 0 signature.
            if (eqs.rank() == 0) return BitWord::zero(n);
        }
    }
    throw ShotBudgetExhausted("rank " + std::to_string(eqs.rank()) + " after " +
                              std::to_string(shots) + " samples");
}

BitWord top_half_recover_k1(const Distribution& counts, int n) {
    if (counts.width() != n)
        throw WidthMismatch("distribution width " + std::to_string(counts.width()) +
                            " != n " + std::to_string(n));
    EquationSet eqs(n);
    for (std::uint32_t outcome : counts.top_half()) {
        eqs.add_row(BitWord(n, outcome));
        if (eqs.rank() == n - 1) return eqs.solve_period();
    }
    if (eqs.rank() == n)  // n = 1 only: a single nonzero outcome is already full rank
        return BitWord::zero(n);
    throw InsufficientRank("top half spans only " + std::to_string(eqs.rank()) +
                           " dimensions, need " + std::to_string(n - 1));
}

bool verify_keys(const PermTable& lut, const BitWord& k1, const BitWord& k2,
                 const EncryptionOracle& oracle) {
    for (std::uint32_t x = 0; x < lut.size(); ++x) {
        BitWord plain(lut.n(), x);
        if (!((lut.apply(plain ^ k1) ^ k2) == oracle(plain))) return false;
    }
    return true;
}

AttackResult run_attack(const AttackConfig& cfg) {
    const int n = cfg.n();
    EmInstance instance(cfg.lut, cfg.true_key);
    EncryptionOracle oracle = [&instance](const BitWord& x) { return instance.encrypt(x); };

    Distribution ideal = simon_output_distribution(instance.f_table(), n);
    const double noise = cfg.noise_p.value();
    const std::uint64_t sample_seed = rng::derive(cfg.seed, "attack.simon");

    BitWord k1 = BitWord::zero(n);
    std::vector<int> trajectory;
    std::uint64_t shots_used = 0;
    Distribution observed(n, Distribution::Kind::Counts);

    if (cfg.strategy == Strategy::Streaming) {
        // One draw per oracle query; the mixture models depolarization.
        std::vector<double> probs = ideal.normalized();
        std::vector<double> cdf(probs.size());
        double acc = 0;
        for (size_t i = 0; i < probs.size(); ++i) cdf[i] = (acc += probs[i]);
        cdf.back() = 1.0;
        auto gen = rng::stream(sample_seed, "attack.stream");
        auto sampler = [&]() {
            std::uint32_t outcome;
            if (noise > 0.0 && rng::uniform01(gen) < noise) {
                outcome = rng::uniform_pow2(gen, n);
            } else {
                double u = rng::uniform01(gen);
                outcome = static_cast<std::uint32_t>(
                    std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            }
            observed.add(outcome);
            return BitWord(n, outcome);
        };
        k1 = streaming_recover_k1(sampler, n, cfg.max_shots, cfg.margin_r, &trajectory,
                                  &shots_used);
    } else {
        observed = noise > 0.0 ? noisy_sample(ideal, noise, cfg.shots, sample_seed)
                               : sample(ideal, cfg.shots, sample_seed);
        shots_used = cfg.shots;
        k1 = top_half_recover_k1(observed, n);
    }

    BitWord message = cfg.k2_message.value_or(BitWord::zero(n));
    BitWord k2 = recover_k2(oracle, cfg.lut, k1, message);
    if (cfg.noisy_k2) {
        // Qualitative second-step noise: observations of the k2 value pass
        // through the same mixture; take the mode.
        Distribution point(n, Distribution::Kind::Probabilities);
        point.add(k2.bits(), 1.0);
        Distribution draws = noisy_sample(point, noise, cfg.k2_shots,
                                          rng::derive(cfg.seed, "attack.k2"));
        std::uint32_t mode = 0;
        for (std::uint32_t v = 0; v < draws.size(); ++v)
            if (draws.weight(v) > draws.weight(mode)) mode = v;
        k2 = BitWord(n, mode);
    }

    AttackResult result{
        .recovered_k1 = k1,
        .recovered_k2 = k2,
        .shots_used = shots_used,
        .rank_trajectory = std::move(trajectory),
        .success = k1 == cfg.true_key.k1 && k2 == cfg.true_key.k2,
        .verified = verify_keys(cfg.lut, k1, k2, oracle),
        .samples = std::move(observed),
    };
    return result;
}

}  // namespace emsim
