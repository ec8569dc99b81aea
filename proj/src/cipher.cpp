#include "emsim/cipher.hpp"

#include <cmath>

namespace emsim {

EmInstance::EmInstance(PermTable perm, EmKey key)
    : perm_(std::move(perm)), inv_perm_(invert_perm(perm_)), key_(std::move(key)) {
    if (key_.k1.width() != perm_.n())
        throw WidthMismatch("key width " + std::to_string(key_.k1.width()) +
                            " != permutation width " + std::to_string(perm_.n()));
}

BitWord EmInstance::encrypt(const BitWord& x) const {
    return perm_.apply(x ^ key_.k1) ^ key_.k2;
}

BitWord EmInstance::decrypt(const BitWord& y) const {
    return inv_perm_.apply(y ^ key_.k2) ^ key_.k1;
}

BitWord EmInstance::simon_f(const BitWord& x) const {
    return encrypt(x) ^ perm_.apply(x);
}

std::vector<BitWord> EmInstance::f_table() const {
    std::vector<BitWord> table;
    table.reserve(perm_.size());
    for (std::uint32_t x = 0; x < perm_.size(); ++x)
        table.push_back(simon_f(BitWord(n(), x)));
    return table;
}

Rational epsilon(const EmInstance& inst) {
    int n = inst.n();
    if (n < 2) throw InvalidArgument("epsilon requires n >= 2");
    std::uint32_t size = inst.perm().size();
    std::uint32_t k1 = inst.key().k1.bits();

    // k2 cancels when comparing f(x) with f(x^t), so work on P directly.
    std::vector<std::uint32_t> f(size);
    for (std::uint32_t x = 0; x < size; ++x)
        f[x] = static_cast<std::uint32_t>(inst.perm()[x ^ k1] ^ inst.perm()[x]);

    std::int64_t worst = 0;
    for (std::uint32_t t = 1; t < size; ++t) {
        if (t == k1) continue;
        std::int64_t hits = 0;
        for (std::uint32_t x = 0; x < size; ++x)
            if (f[x] == f[x ^ t]) ++hits;
        worst = std::max(worst, hits);
    }
    return Rational(worst, static_cast<std::int64_t>(size));
}

double success_probability(double eps, double c, int n) {
    if (eps < 0.0 || eps >= 1.0)
        throw EpsilonOutOfRange("eps must satisfy 0 <= eps < 1, got " + std::to_string(eps));
    if (c <= 0.0) throw InvalidArgument("query factor c must be positive");
    double p = 1.0 - std::pow(2.0 * std::pow((1.0 + eps) / 2.0, c), n);
    return p < 0.0 ? 0.0 : p;
}

BitWord recover_k2(const EncryptionOracle& oracle, const PermTable& perm,
                   const BitWord& k1, const BitWord& m) {
    return oracle(m) ^ perm.apply(m ^ k1);
}

}  // namespace emsim
