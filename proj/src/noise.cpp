#include "emsim/noise.hpp"

#include <algorithm>
#include <cmath>

#include "emsim/rng.hpp"

namespace emsim {

DepolModel::DepolModel(Rational p, int n, std::vector<std::uint32_t> support_in)
    : p(p), n(n), support(std::move(support_in)) {
    if (p < Rational(0) || p > Rational(1))
        throw InvalidArgument("depolarization parameter must be in [0,1], got " + p.str());
    if (n < 1 || n > BitWord::kMaxWidth)
        throw InvalidArgument("model width out of range");
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (std::uint32_t s : support)
        if (s >> n) throw InvalidArgument("support outcome out of range");
    if (support.size() != size_t{1} << (n - 1))
        throw InvalidArgument("support must cover exactly half the space, got " +
                              std::to_string(support.size()) + " of " +
                              std::to_string(size_t{1} << n));
}

DepolModel DepolModel::from_period(Rational p, const BitWord& k1) {
    if (k1.is_zero()) throw InvalidArgument("period 0 has no half-space support");
    std::vector<std::uint32_t> support;
    for (std::uint32_t y = 0; y < (std::uint32_t{1} << k1.width()); ++y)
        if (dot(BitWord(k1.width(), y), k1) == 0) support.push_back(y);
    return DepolModel(p, k1.width(), std::move(support));
}

bool DepolModel::in_support(std::uint32_t outcome) const {
    return std::binary_search(support.begin(), support.end(), outcome);
}

std::vector<Rational> sigma_p_exact(const DepolModel& model) {
    const std::int64_t half = std::int64_t{1} << (model.n - 1);
    const std::int64_t full = std::int64_t{1} << model.n;
    // on-support: (1 - p/2) / 2^(n-1), off-support: p / 2^n
    Rational on = (Rational(1) - model.p * Rational(1, 2)) * Rational(1, half);
    Rational off = model.p * Rational(1, full);
    std::vector<Rational> masses(static_cast<size_t>(full));
    for (std::int64_t x = 0; x < full; ++x)
        masses[static_cast<size_t>(x)] =
            model.in_support(static_cast<std::uint32_t>(x)) ? on : off;
    return masses;
}

Distribution sigma_p(const DepolModel& model) {
    std::vector<Rational> exact = sigma_p_exact(model);
    std::vector<double> probs(exact.size());
    for (size_t i = 0; i < exact.size(); ++i) probs[i] = exact[i].value();
    return Distribution::probabilities(model.n, std::move(probs));
}

double effective_p(std::uint64_t m_pulses, double p_gate) {
    if (p_gate < 0) throw InvalidArgument("gate error rate must be nonnegative");
    double p = static_cast<double>(m_pulses) * p_gate;
    return std::clamp(p, 0.0, 1.0);
}

Distribution noisy_sample(const Distribution& ideal, double p, std::uint64_t shots,
                          std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw InvalidArgument("mixture probability must be in [0,1]");
    if (shots < 1) throw InvalidArgument("shots must be >= 1");
    std::vector<double> probs = ideal.normalized();
    std::vector<double> cdf(probs.size());
    double acc = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    auto gen = rng::stream(seed, "noise.mixture");
    Distribution out(ideal.width(), Distribution::Kind::Counts);
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (rng::uniform01(gen) < p) {
            out.add(rng::uniform_pow2(gen, ideal.width()));
        } else {
            double u = rng::uniform01(gen);
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            out.add(static_cast<std::uint32_t>(it - cdf.begin()));
        }
    }
    return out;
}

double tv_distance(const Distribution& a, const Distribution& b) {
    if (a.width() != b.width())
        throw WidthMismatch("distribution widths " + std::to_string(a.width()) + " and " +
                            std::to_string(b.width()) + " differ");
    std::vector<double> pa = a.normalized(), pb = b.normalized();
    double l1 = 0;
    for (size_t i = 0; i < pa.size(); ++i) l1 += std::abs(pa[i] - pb[i]);
    return l1 / 2.0;
}

}  // namespace emsim
