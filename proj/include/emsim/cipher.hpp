#ifndef EMSIM_CIPHER_HPP
#define EMSIM_CIPHER_HPP

#include <functional>
#include <vector>

#include "emsim/bitword.hpp"
#include "emsim/galois.hpp"
#include "emsim/rational.hpp"

namespace emsim {

/// Pre- and post-whitening keys of equal width.
struct EmKey {
    BitWord k1;
    BitWord k2;

    EmKey(BitWord k1, BitWord k2) : k1(k1), k2(k2) { k1.check_same_width(k2); }
};

/// Even-Mansour instance: EM(x) = P(x ^ k1) ^ k2 for a public permutation P.
class EmInstance {
public:
    EmInstance(PermTable perm, EmKey key);

    int n() const { return perm_.n(); }
    const PermTable& perm() const { return perm_; }
    const EmKey& key() const { return key_; }

    BitWord encrypt(const BitWord& x) const;
    BitWord decrypt(const BitWord& y) const;

    /// The attack function f(x) = EM(x) ^ P(x); has period k1.
    BitWord simon_f(const BitWord& x) const;

    /// f materialized over all 2^n inputs, for the quantum oracle.
    std::vector<BitWord> f_table() const;

private:
    PermTable perm_;
    PermTable inv_perm_;
    EmKey key_;
};

/// Query access to an encryption box; in simulation this wraps EmInstance.
using EncryptionOracle = std::function<BitWord(const BitWord&)>;

/// Worst-case collision probability of f under a shift outside {0, k1},
/// by full enumeration. Exact rational; independent of k2. Constant f
/// (k1 = 0) yields 1.
Rational epsilon(const EmInstance& inst);

/// 1 - (2((1+eps)/2)^c)^n, clamped below at 0. Requires 0 <= eps < 1.
double success_probability(double eps, double c, int n);

/// k2 = oracle(m) ^ P(m ^ k1); independent of m when k1 is correct.
BitWord recover_k2(const EncryptionOracle& oracle, const PermTable& perm,
                   const BitWord& k1, const BitWord& m);

}  // namespace emsim

#endif
