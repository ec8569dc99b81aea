#ifndef EMSIM_NOISE_HPP
#define EMSIM_NOISE_HPP

#include <cstdint>
#include <vector>

#include "emsim/bitword.hpp"
#include "emsim/distribution.hpp"
#include "emsim/rational.hpp"

namespace emsim {

/// Output-level symmetric depolarization: the ideal Simon support S gets
/// (1 - p/2) / 2^(n-1) per outcome, its complement p / 2^n. The support
/// must cover exactly half the space, which is what a valid period yields.
struct DepolModel {
    Rational p;
    int n;
    std::vector<std::uint32_t> support;

    DepolModel(Rational p, int n, std::vector<std::uint32_t> support);

    /// S = k1-perp, the ideal support for period k1 (k1 != 0).
    static DepolModel from_period(Rational p, const BitWord& k1);

    bool in_support(std::uint32_t outcome) const;
};

/// The sigma_p distribution in doubles.
Distribution sigma_p(const DepolModel& model);

/// Exact per-outcome masses, index order; sums to exactly 1.
std::vector<Rational> sigma_p_exact(const DepolModel& model);

/// Naive hardware error rate M * p_gate, clamped to [0,1].
double effective_p(std::uint64_t m_pulses, double p_gate);

/// Per shot: with probability p draw uniformly over all outcomes, otherwise
/// draw from the ideal distribution. Reproduces sigma_p exactly when the
/// ideal is uniform on a half-space support.
Distribution noisy_sample(const Distribution& ideal, double p, std::uint64_t shots,
                          std::uint64_t seed);

/// Total variation distance: half the L1 distance between the normalized
/// weight vectors.
double tv_distance(const Distribution& a, const Distribution& b);

}  // namespace emsim

#endif
