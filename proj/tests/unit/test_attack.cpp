#include <doctest.h>

#include <random>

#include "emsim/attack.hpp"
#include "emsim/qsim.hpp"
#include "emsim/rng.hpp"
#include "helpers.hpp"

using namespace emsim;
using emsim::testing::random_promise_instance;

#ifndef EMSIM_FIXTURES_DIR
#define EMSIM_FIXTURES_DIR "fixtures"
#endif

namespace {

std::string fixture(const std::string& name) {
    return std::string(EMSIM_FIXTURES_DIR) + "/" + name;
}

AttackConfig ref3_config() {
    return AttackConfig{
        .lut = parse_lut("52367401", 3),
        .true_key = EmKey(BitWord::parse("010"), BitWord::parse("110")),
    };
}

AttackConfig ref4_config() {
    return AttackConfig{
        .lut = parse_lut("E4B238091A7F6C5D", 4),
        .true_key = EmKey(BitWord::parse("0101"), BitWord::parse("1101")),
    };
}

}  // namespace

TEST_CASE("streaming recovers both reference keys noiselessly") {
    AttackConfig cfg3 = ref3_config();
    cfg3.margin_r = 16;
    cfg3.seed = 1;
    AttackResult r3 = run_attack(cfg3);
    CHECK(r3.recovered_k1 == BitWord::parse("010"));
    CHECK(r3.recovered_k2 == BitWord::parse("110"));
    CHECK(r3.success);
    CHECK(r3.verified);
    CHECK(r3.shots_used == 19);  // decides exactly at n + r

    AttackConfig cfg4 = ref4_config();
    cfg4.seed = 2;
    AttackResult r4 = run_attack(cfg4);
    CHECK(r4.recovered_k1 == BitWord::parse("0101"));
    CHECK(r4.recovered_k2 == BitWord::parse("1101"));
    CHECK(r4.success);
}

TEST_CASE("every noiseless sample is orthogonal to k1") {
    AttackConfig cfg = ref3_config();
    cfg.seed = 77;
    AttackResult r = run_attack(cfg);
    for (const BitWord& y : r.samples.support()) CHECK(dot(y, BitWord::parse("010")) == 0);
}

TEST_CASE("k1 = 0 instances resolve through the all-zero-sample signature") {
    // Constant f interferes every shot back to the zero outcome, so the
    // streaming rank stays 0 and the attack reports period 0 at n + r.
    std::mt19937_64 gen(41);
    PermTable p = emsim::testing::random_permutation(3, gen);
    AttackConfig cfg{
        .lut = p,
        .true_key = EmKey(BitWord::zero(3), BitWord::parse("101")),
        .margin_r = 16,
        .seed = 11,
    };
    AttackResult r = run_attack(cfg);
    CHECK(r.recovered_k1 == BitWord::zero(3));
    CHECK(r.recovered_k2 == BitWord::parse("101"));
    CHECK(r.success);
    CHECK(r.verified);
    CHECK(r.shots_used == 19);
    for (int rank : r.rank_trajectory) CHECK(rank == 0);
    for (const BitWord& y : r.samples.support()) CHECK(y.is_zero());
}

TEST_CASE("streaming raises at the shot cap") {
    int draws = 0;
    auto sampler = [&]() {
        ++draws;
        return BitWord::parse("100");  // rank never passes 1
    };
    CHECK_THROWS_AS(streaming_recover_k1(sampler, 3, 32, 8), ShotBudgetExhausted);
    CHECK(draws == 32);
    CHECK_THROWS_AS(streaming_recover_k1(sampler, 3, 10, 8), InvalidArgument);  // cap < n + r
}

TEST_CASE("top half solves the bundled measurement tables") {
    Distribution t1 = Distribution::read_csv_file(fixture("table1_simon.csv"));
    CHECK(top_half_recover_k1(t1, 3) == BitWord::parse("010"));

    Distribution t2 = Distribution::read_csv_file(fixture("table2_simon.csv"));
    CHECK(top_half_recover_k1(t2, 4) == BitWord::parse("0101"));
}

TEST_CASE("top half on the exact noiseless 3-bit distribution") {
    EmInstance em(parse_lut("52367401", 3),
                  EmKey(BitWord::parse("010"), BitWord::parse("110")));
    Distribution exact = simon_output_distribution(em.f_table(), 3);
    CHECK(top_half_recover_k1(exact, 3) == BitWord::parse("010"));
}

TEST_CASE("top half reports insufficient rank on degenerate counts") {
    Distribution flat(3, Distribution::Kind::Counts);
    flat.add(0b000, 10);
    flat.add(0b001, 9);  // the only observed outcomes span one dimension
    CHECK_THROWS_AS(top_half_recover_k1(flat, 3), InsufficientRank);
    CHECK_THROWS_AS(top_half_recover_k1(flat, 4), WidthMismatch);
}

TEST_CASE("verify_keys accepts the truth and rejects perturbations") {
    EmInstance em(parse_lut("52367401", 3),
                  EmKey(BitWord::parse("010"), BitWord::parse("110")));
    EncryptionOracle oracle = [&](const BitWord& x) { return em.encrypt(x); };
    CHECK(verify_keys(em.perm(), BitWord::parse("010"), BitWord::parse("110"), oracle));
    CHECK_FALSE(verify_keys(em.perm(), BitWord::parse("010"), BitWord::parse("111"), oracle));
    // adjusted k2 cannot repair a wrong k1 on this instance
    for (std::uint32_t wrong = 0; wrong < 8; ++wrong) {
        BitWord k1(3, wrong);
        if (k1 == em.key().k1) continue;
        BitWord k2 = recover_k2(oracle, em.perm(), k1, BitWord::zero(3));
        CHECK_FALSE(verify_keys(em.perm(), k1, k2, oracle));
    }
}

TEST_CASE("attack results are bitwise reproducible per seed") {
    AttackConfig cfg = ref3_config();
    cfg.strategy = Strategy::TopHalf;
    cfg.noise_p = Rational::parse("0.434");
    cfg.shots = 20000;
    cfg.seed = 31337;
    AttackResult a = run_attack(cfg);
    AttackResult b = run_attack(cfg);
    CHECK(a.recovered_k1 == b.recovered_k1);
    CHECK(a.recovered_k2 == b.recovered_k2);
    CHECK(a.samples == b.samples);
    CHECK(a.rank_trajectory == b.rank_trajectory);
    CHECK(a.shots_used == b.shots_used);
    CHECK(a.success == b.success);
}

TEST_CASE("noisy top-half attack at the reference operating point") {
    AttackConfig cfg = ref3_config();
    cfg.strategy = Strategy::TopHalf;
    cfg.noise_p = Rational::parse("0.434");
    cfg.shots = 100000;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        cfg.seed = seed;
        AttackResult r = run_attack(cfg);
        CHECK(r.success);
    }
}

TEST_CASE("noisy 4-bit top-half attack at the reference operating point") {
    // The mixture keeps the on-support tiers (~0.133 and exactly 1/16) well
    // above the off-support mass (~0.027), so the top half survives noise.
    AttackConfig cfg = ref4_config();
    cfg.strategy = Strategy::TopHalf;
    cfg.noise_p = Rational::parse("0.434");
    cfg.shots = 100000;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        cfg.seed = seed;
        AttackResult r = run_attack(cfg);
        CHECK(r.recovered_k1 == BitWord::parse("0101"));
        CHECK(r.recovered_k2 == BitWord::parse("1101"));
        CHECK(r.success);
    }
}

TEST_CASE("noisy k2 mode still lands on the true key via the mode") {
    AttackConfig cfg = ref3_config();
    cfg.strategy = Strategy::TopHalf;
    cfg.noise_p = Rational::parse("0.434");
    cfg.shots = 50000;
    cfg.noisy_k2 = true;
    cfg.k2_shots = 2000;
    cfg.seed = 4;
    AttackResult r = run_attack(cfg);
    CHECK(r.recovered_k2 == BitWord::parse("110"));
    CHECK(r.success);
}

TEST_CASE("streaming and top-half agree on random promise instances") {
    std::mt19937_64 gen(123);
    for (int n = 3; n <= 5; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            // k1 = 0 excluded: top-half has no support to select from there.
            EmInstance inst = random_promise_instance(n, gen, /*allow_zero_k1=*/false);
            AttackConfig cfg{
                .lut = inst.perm(),
                .true_key = inst.key(),
                .strategy = Strategy::Streaming,
                .max_shots = 4096,
                .margin_r = 16,
                .seed = gen(),
            };
            AttackResult streaming = run_attack(cfg);
            cfg.strategy = Strategy::TopHalf;
            cfg.shots = 4096;
            AttackResult top = run_attack(cfg);
            CHECK(streaming.recovered_k1 == top.recovered_k1);
            CHECK(streaming.success);
            CHECK(top.success);
        }
    }
}

TEST_CASE("n = 2 instances always hide k1 behind an equivalent key") {
    // For width 2 the two coset values of f XOR to zero, making f constant
    // for every k1: the zero-sample signature fires, and the recovered
    // (0, k2 ^ f) is functionally equivalent to the true key.
    std::mt19937_64 gen(52);
    for (int trial = 0; trial < 20; ++trial) {
        PermTable p = emsim::testing::random_permutation(2, gen);
        BitWord k1(2, 1 + static_cast<std::uint32_t>(gen() % 3));
        EmInstance inst(p, EmKey(k1, emsim::testing::random_word(2, gen)));
        for (const BitWord& v : inst.f_table()) CHECK(v == inst.f_table()[0]);

        AttackConfig cfg{.lut = inst.perm(), .true_key = inst.key(), .seed = gen()};
        AttackResult r = run_attack(cfg);
        CHECK(r.recovered_k1 == BitWord::zero(2));
        CHECK(r.verified);
        CHECK_FALSE(r.success);
    }
}

TEST_CASE("noiseless streaming succeeds across random promise instances") {
    std::mt19937_64 gen(2024);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(gen() % 3);
        EmInstance inst = random_promise_instance(n, gen);
        AttackConfig cfg{
            .lut = inst.perm(),
            .true_key = inst.key(),
            .max_shots = 4096,
            .margin_r = 16,
            .seed = gen(),
        };
        if (!run_attack(cfg).success) ++failures;
    }
    CHECK(failures == 0);
}
