// Command-line front end: S-box handling, circuit synthesis and verification,
// exact/sampled Simon simulation, the two-step key-recovery attack, and the
// noise-model comparison commands. Every invocation is reproducible from its
// --seed, and commands that write files leave a run manifest beside them.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "emsim/attack.hpp"
#include "emsim/cipher.hpp"
#include "emsim/f2linalg.hpp"
#include "emsim/galois.hpp"
#include "emsim/noise.hpp"
#include "emsim/qsim.hpp"
#include "emsim/rng.hpp"
#include "emsim/synth.hpp"
#include "emsim/version.hpp"

using nlohmann::json;
using namespace emsim;

namespace {

struct Manifest {
    std::string command;
    std::vector<std::string> argv;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> inputs;   // path -> fnv1a64 of contents
    std::vector<std::string> outputs;

    void add_input(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) return;
        std::stringstream buf;
        buf << in.rdbuf();
        std::ostringstream hex;
        hex << std::hex << rng::fnv1a(buf.str());
        inputs[path] = hex.str();
    }

    void write() const {
        if (outputs.empty()) return;
        json j{{"command", command}, {"argv", argv},      {"seed", seed},
               {"version", EMSIM_VERSION}, {"inputs", inputs}, {"outputs", outputs}};
        std::ofstream out(outputs.front() + ".manifest.json");
        out << j.dump(2) << "\n";
    }
};

PermTable load_lut(const std::string& lut_flag, const std::string& lut_file, int n,
                   Manifest& manifest) {
    if (!lut_file.empty()) {
        std::ifstream in(lut_file);
        if (!in) throw ParseError("cannot open LUT file: " + lut_file);
        std::string hex, tok;
        while (in >> tok) hex += tok;
        manifest.add_input(lut_file);
        return parse_lut(hex, n);
    }
    return parse_lut(lut_flag, n);
}

json distribution_json(const Distribution& d, json meta) {
    json entries = json::object();
    for (std::uint32_t x = 0; x < d.size(); ++x)
        entries[BitWord(d.width(), x).str()] = d.weight(x);
    meta["n"] = d.width();
    meta["kind"] = d.is_counts() ? "counts" : "probabilities";
    meta["entries"] = entries;
    return meta;
}

void write_text_file(const std::string& path, const std::string& text, Manifest& manifest) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
    manifest.outputs.push_back(path);
}

json attack_result_json(const AttackConfig& cfg, const AttackResult& result) {
    return json{
        {"config",
         {{"n", cfg.n()},
          {"lut", format_lut(cfg.lut)},
          {"strategy", cfg.strategy == Strategy::Streaming ? "streaming" : "top-half"},
          {"shots", cfg.shots},
          {"max_shots", cfg.max_shots},
          {"r", cfg.margin_r},
          {"noise_p", cfg.noise_p.value()}}},
        {"seed", cfg.seed},
        {"recovered_k1", result.recovered_k1.str()},
        {"recovered_k2", result.recovered_k2.str()},
        {"success", result.success},
        {"verified", result.verified},
        {"shots_used", result.shots_used},
        {"rank_trajectory", result.rank_trajectory},
    };
}

int run(int argc, char** argv) {
    CLI::App app{"Even-Mansour / Simon key-recovery simulation workbench"};
    app.set_version_flag("--version", EMSIM_VERSION);
    app.require_subcommand(1);

    Manifest manifest;
    manifest.argv.assign(argv, argv + argc);

    // ---- sbox ----
    auto* sbox = app.add_subcommand("sbox", "Build or validate an S-box LUT");
    struct {
        int n = 3;
        std::string lut, lut_file, poly, matrix, constant, out;
        bool verify = false;
    } sb;
    sbox->add_option("--n", sb.n, "bit width")->required();
    sbox->add_option("--lut", sb.lut, "LUT as hex digits");
    sbox->add_option("--lut-file", sb.lut_file, "file containing the hex LUT");
    sbox->add_option("--poly", sb.poly, "irreducible modulus as a binary string");
    sbox->add_option("--matrix", sb.matrix, "affine rows, comma-separated binary strings");
    sbox->add_option("--constant", sb.constant, "affine constant as a binary string");
    sbox->add_flag("--verify", sb.verify, "validate bijectivity and report");
    sbox->add_option("--out", sb.out, "write the canonical LUT here");

    // ---- synth ----
    auto* synth_cmd = app.add_subcommand("synth", "Synthesize a reversible circuit from a LUT");
    struct {
        int n = 3;
        std::string lut, lut_file, out, metrics;
    } sy;
    synth_cmd->add_option("--n", sy.n)->required();
    synth_cmd->add_option("--lut", sy.lut);
    synth_cmd->add_option("--lut-file", sy.lut_file);
    synth_cmd->add_option("--out", sy.out, "circuit file to write");
    synth_cmd->add_option("--metrics", sy.metrics, "metrics JSON to write");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Check a circuit file against a LUT");
    struct {
        int n = 3;
        std::string circuit, lut, lut_file;
    } vf;
    verify_cmd->add_option("--circuit", vf.circuit)->required();
    verify_cmd->add_option("--n", vf.n)->required();
    verify_cmd->add_option("--lut", vf.lut);
    verify_cmd->add_option("--lut-file", vf.lut_file);

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "Exact or sampled Simon output distribution");
    struct {
        int n = 3;
        std::string lut, lut_file, k1, k2, out, json_out, noise_p = "0";
        std::uint64_t shots = 0, seed = 0;
    } sm;
    sim->add_option("--n", sm.n)->required();
    sim->add_option("--lut", sm.lut);
    sim->add_option("--lut-file", sm.lut_file);
    sim->add_option("--k1", sm.k1)->required();
    sim->add_option("--k2", sm.k2)->required();
    sim->add_option("--shots", sm.shots, "sample this many shots (0 = exact distribution)");
    sim->add_option("--noise-p", sm.noise_p, "mixture weight towards uniform");
    sim->add_option("--seed", sm.seed);
    sim->add_option("--out", sm.out, "distribution CSV");
    sim->add_option("--json", sm.json_out, "distribution JSON with metadata");

    // ---- attack ----
    auto* atk = app.add_subcommand("attack", "Run the two-step key recovery");
    struct {
        int n = 3, r = 16;
        std::string lut, lut_file, k1, k2, strategy = "streaming", noise_p = "0", out;
        std::uint64_t shots = 100000, max_shots = 512, seed = 0, trials = 1, jobs = 1;
        bool noisy_k2 = false;
    } ak;
    atk->add_option("--n", ak.n)->required();
    atk->add_option("--lut", ak.lut);
    atk->add_option("--lut-file", ak.lut_file);
    atk->add_option("--k1", ak.k1, "true prewhitening key (simulation oracle)")->required();
    atk->add_option("--k2", ak.k2, "true postwhitening key")->required();
    atk->add_option("--strategy", ak.strategy)->check(CLI::IsMember({"streaming", "top-half"}));
    atk->add_option("--shots", ak.shots, "top-half sample budget");
    atk->add_option("--max-shots", ak.max_shots, "streaming shot cap");
    atk->add_option("--r", ak.r, "extra queries past n");
    atk->add_option("--noise-p", ak.noise_p);
    atk->add_option("--seed", ak.seed);
    atk->add_option("--trials", ak.trials, "independent seeded trials");
    atk->add_option("--jobs", ak.jobs, "parallel workers for --trials");
    atk->add_flag("--noisy-k2", ak.noisy_k2, "recover k2 from noisy observations");
    atk->add_option("--out", ak.out, "report JSON");

    // ---- epsilon ----
    auto* eps = app.add_subcommand("epsilon", "Imperfect-promise epsilon of an instance");
    struct {
        int n = 3;
        std::string lut, lut_file, k1;
    } ep;
    eps->add_option("--n", ep.n)->required();
    eps->add_option("--lut", ep.lut);
    eps->add_option("--lut-file", ep.lut_file);
    eps->add_option("--k1", ep.k1)->required();

    // ---- psucc ----
    auto* ps = app.add_subcommand("psucc", "Success probability after c*n queries");
    struct {
        double eps = 0, c = 1;
        int n = 3;
    } pc;
    ps->add_option("--eps", pc.eps)->required();
    ps->add_option("--c", pc.c)->required();
    ps->add_option("--n", pc.n)->required();

    // ---- noise-fit ----
    auto* nf = app.add_subcommand("noise-fit", "TV distance of sigma_p against measured counts");
    struct {
        std::string p = "0.434", table, k1;
    } nfo;
    nf->add_option("--p", nfo.p)->required();
    nf->add_option("--table", nfo.table, "CSV of outcome,count")->required();
    nf->add_option("--k1", nfo.k1, "period defining the ideal support")->required();

    CLI11_PARSE(app, argc, argv);

    if (sbox->parsed()) {
        manifest.command = "sbox";
        PermTable table = sb.poly.empty()
                              ? load_lut(sb.lut, sb.lut_file, sb.n, manifest)
                              : [&] {
                                    FieldSpec spec(sb.n, BitWord::parse(sb.poly).bits());
                                    std::vector<std::uint32_t> rows;
                                    std::stringstream ss(sb.matrix);
                                    for (std::string row; std::getline(ss, row, ',');)
                                        rows.push_back(BitWord::parse(row).bits());
                                    AffineMap aff(sb.n, rows, BitWord::parse(sb.constant).bits());
                                    return build_sbox(spec, aff);
                                }();
        // reaching here means the bijectivity invariant held
        std::cout << "lut " << format_lut(table) << (sb.verify ? " bijective OK" : "") << "\n";
        if (!sb.out.empty()) {
            write_text_file(sb.out, format_lut(table) + "\n", manifest);
            manifest.write();
        }
        return 0;
    }

    if (synth_cmd->parsed()) {
        manifest.command = "synth";
        PermTable target = load_lut(sy.lut, sy.lut_file, sy.n, manifest);
        Circuit circuit = synthesize(target);
        if (!(truth_table(circuit) == target))
            throw NotBijective("internal: synthesized circuit failed verification");
        CostTable costs;
        json metrics{{"n", sy.n},
                     {"lut", format_lut(target)},
                     {"gates", circuit.gates.size()},
                     {"depth", depth(circuit, costs)},
                     {"t_depth", t_depth(circuit, costs)}};
        std::cout << metrics.dump() << "\n";
        if (!sy.out.empty()) write_text_file(sy.out, circuit_to_string(circuit), manifest);
        if (!sy.metrics.empty()) write_text_file(sy.metrics, metrics.dump(2) + "\n", manifest);
        manifest.write();
        return 0;
    }

    if (verify_cmd->parsed()) {
        manifest.command = "verify";
        Circuit circuit = read_circuit_file(vf.circuit);
        manifest.add_input(vf.circuit);
        PermTable target = load_lut(vf.lut, vf.lut_file, vf.n, manifest);
        PermTable actual = truth_table(circuit);
        CostTable costs;
        bool match = actual == target;
        std::cout << (match ? "match" : "mismatch") << " lut " << format_lut(actual)
                  << " depth " << depth(circuit, costs) << " t-depth " << t_depth(circuit, costs)
                  << "\n";
        return match ? 0 : 2;
    }

    if (sim->parsed()) {
        manifest.command = "simulate";
        manifest.seed = sm.seed;
        PermTable lut = load_lut(sm.lut, sm.lut_file, sm.n, manifest);
        EmInstance instance(lut, EmKey(BitWord::parse(sm.k1), BitWord::parse(sm.k2)));
        Distribution dist = simon_output_distribution(instance.f_table(), sm.n);
        Rational noise = Rational::parse(sm.noise_p);
        if (sm.shots > 0)
            dist = noise.num != 0 ? noisy_sample(dist, noise.value(), sm.shots, sm.seed)
                                  : sample(dist, sm.shots, sm.seed);
        std::ostringstream csv;
        dist.write_csv(csv);
        if (sm.out.empty() && sm.json_out.empty()) {
            std::cout << csv.str();
        } else {
            if (!sm.out.empty()) write_text_file(sm.out, csv.str(), manifest);
            if (!sm.json_out.empty()) {
                json meta{{"shots", sm.shots}, {"seed", sm.seed}, {"noise_p", noise.value()}};
                write_text_file(sm.json_out, distribution_json(dist, meta).dump(2) + "\n",
                                manifest);
            }
            manifest.write();
        }
        return 0;
    }

    if (atk->parsed()) {
        manifest.command = "attack";
        manifest.seed = ak.seed;
        PermTable lut = load_lut(ak.lut, ak.lut_file, ak.n, manifest);
        AttackConfig cfg{
            .lut = lut,
            .true_key = EmKey(BitWord::parse(ak.k1), BitWord::parse(ak.k2)),
            .strategy = ak.strategy == "streaming" ? Strategy::Streaming : Strategy::TopHalf,
            .shots = ak.shots,
            .max_shots = ak.max_shots,
            .margin_r = ak.r,
            .noise_p = Rational::parse(ak.noise_p),
            .seed = ak.seed,
            .k2_message = std::nullopt,
            .noisy_k2 = ak.noisy_k2,
        };

        auto trial_config = [&](std::uint64_t index) {
            AttackConfig trial_cfg = cfg;
            trial_cfg.seed = ak.trials == 1 ? cfg.seed : rng::derive(cfg.seed, "trial", index);
            return trial_cfg;
        };
        auto one_trial = [&](std::uint64_t index) { return run_attack(trial_config(index)); };

        std::vector<std::optional<AttackResult>> results(ak.trials);
        std::string failure;
        if (ak.jobs <= 1 || ak.trials == 1) {
            for (std::uint64_t i = 0; i < ak.trials; ++i) {
                try {
                    results[i] = one_trial(i);
                } catch (const Error& e) {
                    if (failure.empty()) failure = e.what();
                }
            }
        } else {
            std::vector<std::future<AttackResult>> futures;
            for (std::uint64_t i = 0; i < ak.trials; ++i)
                futures.push_back(std::async(std::launch::async, one_trial, i));
            for (std::uint64_t i = 0; i < ak.trials; ++i) {
                try {
                    results[i] = futures[i].get();
                } catch (const Error& e) {
                    if (failure.empty()) failure = e.what();
                }
            }
        }
        if (ak.trials == 1 && !results[0]) {
            std::cerr << "error: " << failure << "\n";
            return 2;
        }

        std::uint64_t successes = 0, errored = 0;
        for (const auto& r : results) {
            if (!r) ++errored;
            else if (r->success) ++successes;
        }
        json report;
        if (ak.trials == 1) {
            report = attack_result_json(cfg, *results[0]);
        } else {
            report = json{{"trials", ak.trials},
                          {"successes", successes},
                          {"failures_errored", errored},
                          {"seed", ak.seed}};
            json per = json::array();
            for (std::uint64_t i = 0; i < ak.trials; ++i)
                if (results[i]) per.push_back(attack_result_json(trial_config(i), *results[i]));
            report["results"] = per;
        }
        if (!ak.out.empty()) {
            // raw Simon-side counts go next to the report
            std::string samples_path = ak.out + ".samples.csv";
            if (ak.trials == 1) report["distribution_path"] = samples_path;
            write_text_file(ak.out, report.dump(2) + "\n", manifest);
            if (ak.trials == 1) {
                std::ostringstream csv;
                results[0]->samples.write_csv(csv);
                write_text_file(samples_path, csv.str(), manifest);
            }
            manifest.write();
        }
        std::cout << report.dump(2) << "\n";
        bool all_ok = failure.empty() && successes == ak.trials;
        return all_ok ? 0 : 2;
    }

    if (eps->parsed()) {
        manifest.command = "epsilon";
        PermTable lut = load_lut(ep.lut, ep.lut_file, ep.n, manifest);
        BitWord k1 = BitWord::parse(ep.k1);
        EmInstance instance(lut, EmKey(k1, BitWord::zero(ep.n)));
        Rational value = epsilon(instance);
        std::cout << "epsilon " << value.str() << " (" << value.value() << ")\n";
        return 0;
    }

    if (ps->parsed()) {
        std::cout << "psucc " << success_probability(pc.eps, pc.c, pc.n) << "\n";
        return 0;
    }

    if (nf->parsed()) {
        manifest.command = "noise-fit";
        Distribution measured = Distribution::read_csv_file(nfo.table);
        manifest.add_input(nfo.table);
        DepolModel model = DepolModel::from_period(Rational::parse(nfo.p),
                                                   BitWord::parse(nfo.k1));
        double tv = tv_distance(sigma_p(model), measured);
        std::cout << "tv " << tv << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout.precision(12);
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
