// Acceptance suite: one line per criterion, nonzero exit if any fail.
// Runs everything from fixed seeds; total runtime is a couple of minutes.

#include <sys/resource.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "emsim/attack.hpp"
#include "emsim/cipher.hpp"
#include "emsim/f2linalg.hpp"
#include "emsim/noise.hpp"
#include "emsim/qsim.hpp"
#include "emsim/rng.hpp"
#include "emsim/synth.hpp"

using namespace emsim;

#ifndef EMSIM_FIXTURES_DIR
#define EMSIM_FIXTURES_DIR "fixtures"
#endif

namespace {

std::string fixture(const std::string& name) {
    return std::string(EMSIM_FIXTURES_DIR) + "/" + name;
}

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    if (!detail.empty() && detail.rfind("FAIL", 0) == 0) ok = false;
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

EmInstance ref3() {
    return EmInstance(parse_lut("52367401", 3),
                      EmKey(BitWord::parse("010"), BitWord::parse("110")));
}

EmInstance ref4() {
    return EmInstance(parse_lut("E4B238091A7F6C5D", 4),
                      EmKey(BitWord::parse("0101"), BitWord::parse("1101")));
}

PermTable random_permutation(int n, std::mt19937_64& gen) {
    std::vector<std::uint16_t> t(size_t{1} << n);
    for (size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint16_t>(i);
    for (size_t i = t.size(); i > 1; --i) std::swap(t[i - 1], t[gen() % i]);
    return PermTable(n, std::move(t));
}

bool has_extra_period(const PermTable& p, std::uint32_t k1) {
    const std::uint32_t size = p.size();
    std::vector<std::uint32_t> f(size);
    for (std::uint32_t x = 0; x < size; ++x) f[x] = static_cast<std::uint32_t>(p[x ^ k1] ^ p[x]);
    for (std::uint32_t t = 1; t < size; ++t) {
        if (t == k1) continue;
        bool period = true;
        for (std::uint32_t x = 0; x < size && period; ++x) period = f[x] == f[x ^ t];
        if (period) return true;
    }
    return false;
}

// Instances satisfying Simon's promise for k1 recovery (the premise of the
// 1 - 2^-r bound): k1 = 0 is kept, a second exact period is rejected.
EmInstance random_promise_instance(int n, std::mt19937_64& gen) {
    for (;;) {
        PermTable p = random_permutation(n, gen);
        std::uint32_t k1 = static_cast<std::uint32_t>(gen()) & ((1u << n) - 1);
        std::uint32_t k2 = static_cast<std::uint32_t>(gen()) & ((1u << n) - 1);
        if (k1 != 0 && has_extra_period(p, k1)) continue;
        return EmInstance(std::move(p), EmKey(BitWord(n, k1), BitWord(n, k2)));
    }
}

// P[Bin(n, p) <= k], exact up to double rounding via log-gamma terms.
double binom_cdf(int k, int n, double p) {
    double cdf = 0;
    for (int i = 0; i <= k; ++i) {
        double log_term = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                          std::lgamma(n - i + 1.0) + i * std::log(p) +
                          (n - i) * std::log1p(-p);
        cdf += std::exp(log_term);
    }
    return cdf;
}

long peak_rss_mb() {
    struct rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return usage.ru_maxrss / 1024;  // ru_maxrss is KiB on Linux
}

}  // namespace

int main() {
    std::printf("acceptance suite (fixtures: %s)\n", EMSIM_FIXTURES_DIR);

    criterion(1, "epsilon reproduction (exact rationals)", [] {
        Rational eps3 = epsilon(ref3());
        Rational eps4 = epsilon(ref4());
        std::ostringstream msg;
        msg << "3-bit eps = " << eps3.str() << " (reference 0), 4-bit eps = " << eps4.str()
            << " (reference 1/4; full enumeration of the shipped LUT is the arbiter"
               " and yields 1/2, so this half stays red)";
        // The reference 1/4 matches the 4 unordered colliding pairs out of 16
        // inputs at the worst shift; Pr_x[f(x) = f(x^t)] counts both members
        // of each pair, 8/16. The stated value is asserted as given.
        if (eps3 == Rational(0) && eps4 == Rational(1, 4)) return msg.str();
        return "FAIL " + msg.str();
    });

    criterion(2, "exact 3-bit Simon distribution", [] {
        Distribution d = simon_output_distribution(ref3().f_table(), 3);
        std::set<std::uint32_t> expected{0b000, 0b001, 0b100, 0b101};
        for (std::uint32_t y = 0; y < 8; ++y) {
            double want = expected.count(y) ? 0.25 : 0.0;
            if (std::abs(d.weight(y) - want) > 1e-9)
                return "FAIL outcome " + BitWord(3, y).str() + " weight " +
                       std::to_string(d.weight(y));
        }
        std::set<std::uint32_t> support;
        for (const BitWord& w : d.support()) support.insert(w.bits());
        if (support != expected) return std::string("FAIL support set mismatch");
        return std::string("uniform 1/4 on {000,001,100,101}");
    });

    criterion(3, "4-bit orthogonality support", [] {
        Distribution d = simon_output_distribution(ref4().f_table(), 4);
        std::set<std::uint32_t> allowed{0b0000, 0b0010, 0b0101, 0b0111,
                                        0b1000, 0b1010, 0b1101, 0b1111};
        double off_mass = 0;
        for (std::uint32_t y = 0; y < 16; ++y)
            if (!allowed.count(y)) off_mass += d.weight(y);
        for (const BitWord& w : d.support())
            if (!allowed.count(w.bits()))
                return "FAIL unexpected outcome " + w.str();
        if (std::abs(off_mass) > 1e-12)
            return "FAIL off-support mass " + std::to_string(off_mass);
        return std::string("support within the eight published results, off-mass 0");
    });

    criterion(4, "key solve reproduction", [] {
        EquationSet three(3);
        three.add_row(BitWord::parse("100"));
        three.add_row(BitWord::parse("001"));
        if (!(three.solve_period() == BitWord::parse("010")))
            return std::string("FAIL 3-bit solve");
        EquationSet four(4);
        four.add_row(BitWord::parse("0010"));
        four.add_row(BitWord::parse("1101"));
        four.add_row(BitWord::parse("1010"));
        if (!(four.solve_period() == BitWord::parse("0101")))
            return std::string("FAIL 4-bit solve");
        return std::string("solve_period -> 010 and 0101");
    });

    criterion(5, "k2 reproduction", [] {
        EmInstance em3 = ref3();
        EmInstance em4 = ref4();
        EncryptionOracle o3 = [&](const BitWord& x) { return em3.encrypt(x); };
        EncryptionOracle o4 = [&](const BitWord& x) { return em4.encrypt(x); };
        BitWord k2_3 = recover_k2(o3, em3.perm(), BitWord::parse("010"), BitWord::zero(3));
        BitWord k2_4 = recover_k2(o4, em4.perm(), BitWord::parse("0101"), BitWord::zero(4));
        if (!(k2_3 == BitWord::parse("110"))) return std::string("FAIL 3-bit k2");
        if (!(k2_4 == BitWord::parse("1101"))) return std::string("FAIL 4-bit k2");
        return std::string("recover_k2 -> 110 and 1101");
    });

    criterion(6, "noiseless streaming attack bound", [] {
        const int trials = 1000;
        std::ostringstream msg;
        for (int r : {8, 16}) {
            for (int n : {3, 4, 5}) {
                int successes = 0;
                for (int trial = 0; trial < trials; ++trial) {
                    std::uint64_t base =
                        rng::derive(0x5eedULL, "accept6", static_cast<std::uint64_t>(
                                                              r * 1000003 + n * 1009 + trial));
                    std::mt19937_64 gen(base);
                    EmInstance inst = random_promise_instance(n, gen);
                    AttackConfig cfg{
                        .lut = inst.perm(),
                        .true_key = inst.key(),
                        .strategy = Strategy::Streaming,
                        .max_shots = 512,
                        .margin_r = r,
                        .seed = gen(),
                    };
                    try {
                        if (run_attack(cfg).success) ++successes;
                    } catch (const Error&) {
                    }
                }
                if (r == 16 && successes != trials)
                    return "FAIL r=16 n=" + std::to_string(n) + ": " +
                           std::to_string(successes) + "/1000";
                if (r == 8) {
                    // One-sided binomial test of H0: p >= 1 - 2^-8 at 99%.
                    double p0 = 1.0 - std::pow(2.0, -8);
                    if (binom_cdf(successes, trials, p0) <= 0.01)
                        return "FAIL r=8 n=" + std::to_string(n) + ": " +
                               std::to_string(successes) + "/1000 rejects the bound";
                    msg << "n" << n << ":" << successes << "/1000 ";
                }
            }
        }
        return "r=8 " + msg.str() + "pass the 1-2^-8 bound; r=16 all 3000 succeed";
    });

    criterion(7, "noisy attack at the operating point", [] {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            AttackConfig cfg{
                .lut = parse_lut("52367401", 3),
                .true_key = EmKey(BitWord::parse("010"), BitWord::parse("110")),
                .strategy = Strategy::TopHalf,
                .shots = 100000,
                .noise_p = Rational::parse("0.434"),
                .seed = seed,
            };
            AttackResult result = run_attack(cfg);
            if (!result.success || !(result.recovered_k1 == BitWord::parse("010")) ||
                !(result.recovered_k2 == BitWord::parse("110")))
                return "FAIL seed " + std::to_string(seed);
        }
        return std::string("(010,110) recovered in 100/100 seeds, p=0.434, 1e5 shots");
    });

    criterion(8, "noise-model fit against the 3-bit table", [] {
        Distribution measured = Distribution::read_csv_file(fixture("table1_simon.csv"));
        DepolModel model = DepolModel::from_period(Rational::parse("0.434"),
                                                   BitWord::parse("010"));
        double tv = tv_distance(sigma_p(model), measured);
        std::ostringstream msg;
        msg << "tv = " << tv << " (limit 0.06)";
        if (tv > 0.06) return "FAIL " + msg.str();
        return msg.str();
    });

    criterion(9, "fixture circuit verification", [] {
        CostTable costs;
        Circuit c3 = read_circuit_file(fixture("sbox3_circuit.txt"));
        if (!(truth_table(c3) == parse_lut("52367401", 3)))
            return std::string("FAIL 3-bit truth table");
        if (depth(c3, costs) != 23 || t_depth(c3, costs) != 3)
            return "FAIL 3-bit metrics " + std::to_string(depth(c3, costs)) + "/" +
                   std::to_string(t_depth(c3, costs));
        Circuit c4 = read_circuit_file(fixture("sbox4_circuit.txt"));
        if (!(truth_table(c4) == parse_lut("E4B238091A7F6C5D", 4)))
            return std::string("FAIL 4-bit truth table");
        Circuit ref4 = read_circuit_file(fixture("sbox4_reference_circuit.txt"));
        std::ostringstream msg;
        msg << "3-bit: LUT + depth 23 / T-depth 3; 4-bit: LUT ok (metrics reported: depth "
            << depth(c4, costs) << " / T-depth " << t_depth(c4, costs)
            << "; reference transcription depth " << depth(ref4, costs) << " / T-depth "
            << t_depth(ref4, costs) << ")";
        return msg.str();
    });

    criterion(10, "synthesis round-trip across widths", [] {
        std::mt19937_64 gen(rng::derive(0x5eedULL, "accept10"));
        for (int n = 3; n <= 8; ++n) {
            for (int trial = 0; trial < 200; ++trial) {
                PermTable p = random_permutation(n, gen);
                Circuit c = synthesize(p);
                if (!(truth_table(c) == p))
                    return "FAIL n=" + std::to_string(n) + " trial " + std::to_string(trial);
            }
        }
        long rss = peak_rss_mb();
        if (rss > 512) return "FAIL peak rss " + std::to_string(rss) + " MB";
        return "200 bijections verified at each n in 3..8, peak rss " + std::to_string(rss) +
               " MB";
    });

    criterion(11, "formula spot checks", [] {
        if (success_probability(0.0, 3.0, 3) != 0.984375)
            return std::string("FAIL success_probability(0,3,3)");
        for (const char* p : {"0", "0.434", "1"}) {
            DepolModel model = DepolModel::from_period(Rational::parse(p),
                                                       BitWord::parse("010"));
            Rational sum(0);
            for (const Rational& mass : sigma_p_exact(model)) sum = sum + mass;
            if (!(sum == Rational(1))) return std::string("FAIL sigma mass sum at p=") + p;
        }
        if (effective_p(434, 1e-3) != 0.434) return std::string("FAIL effective_p");
        return std::string("P_succ = 0.984375 exact, sigma masses sum to 1, p = 0.434");
    });

    criterion(12, "oracle equivalence", [] {
        std::mt19937_64 gen(rng::derive(0x5eedULL, "accept12"));
        for (int n = 2; n <= 6; ++n) {
            for (int trial = 0; trial < 50; ++trial) {
                PermTable p = random_permutation(n, gen);
                std::uint32_t k1 = static_cast<std::uint32_t>(gen()) & ((1u << n) - 1);
                std::uint32_t k2 = static_cast<std::uint32_t>(gen()) & ((1u << n) - 1);
                EmInstance inst(p, EmKey(BitWord(n, k1), BitWord(n, k2)));
                auto f = inst.f_table();
                Distribution closed = simon_closed_form(f, n);
                Distribution simulated = simon_statevector(f, n);
                for (std::uint32_t y = 0; y < closed.size(); ++y)
                    if (std::abs(closed.weight(y) - simulated.weight(y)) > 1e-9)
                        return "FAIL distribution n=" + std::to_string(n);
            }
        }
        for (const char* file : {"sbox3_circuit.txt", "sbox4_circuit.txt",
                                 "sbox4_reference_circuit.txt"}) {
            Circuit c = read_circuit_file(fixture(file));
            if (!(simulate_circuit_unitary(c) == truth_table(c)))
                return "FAIL fixture " + std::string(file);
        }
        for (int trial = 0; trial < 50; ++trial) {
            int n = 3 + static_cast<int>(gen() % 4);
            Circuit c = synthesize(random_permutation(n, gen));
            if (!(simulate_circuit_unitary(c) == truth_table(c)))
                return "FAIL random circuit " + std::to_string(trial);
        }
        return std::string("closed form vs statevector within 1e-9; unitary vs truth table exact");
    });

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
