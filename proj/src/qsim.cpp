#include "emsim/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "emsim/rng.hpp"

namespace emsim {

namespace {
constexpr int kMaxQubits = 24;

void check_wires(int qubits, std::span<const int> wires) {
    for (int w : wires)
        if (w < 0 || w >= qubits)
            throw InvalidArgument("wire " + std::to_string(w) + " out of range");
    std::vector<int> sorted(wires.begin(), wires.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("duplicate wire in list");
}
}  // namespace

StateVector::StateVector(int qubits) : qubits_(qubits) {
    if (qubits < 1 || qubits > kMaxQubits)
        throw InvalidArgument("qubit count out of range: " + std::to_string(qubits));
    amps_.assign(std::uint64_t{1} << qubits, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

StateVector StateVector::basis(int qubits, std::uint32_t index) {
    StateVector sv(qubits);
    sv.amps_[0] = {0.0, 0.0};
    sv.amps_[index] = {1.0, 0.0};
    return sv;
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::hadamard(int wire) {
    check_wires(qubits_, std::array{wire});
    const std::uint64_t stride = index_bit(wire);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::uint64_t base = 0; base < amps_.size(); ++base) {
        if (base & stride) continue;
        auto a = amps_[base];
        auto b = amps_[base | stride];
        amps_[base] = (a + b) * inv_sqrt2;
        amps_[base | stride] = (a - b) * inv_sqrt2;
    }
}

void StateVector::hadamard_layer(std::span<const int> wires) {
    check_wires(qubits_, wires);
    for (int w : wires) hadamard(w);
}

void StateVector::oracle_xor(std::span<const BitWord> f, std::span<const int> in_wires,
                             std::span<const int> out_wires) {
    check_wires(qubits_, in_wires);
    check_wires(qubits_, out_wires);
    for (int a : in_wires)
        for (int b : out_wires)
            if (a == b) throw RangeOverlap("input and output registers share wire " +
                                           std::to_string(a));
    const int n_in = static_cast<int>(in_wires.size());
    const int n_out = static_cast<int>(out_wires.size());
    if (f.size() != std::uint64_t{1} << n_in)
        throw BadLength("oracle table needs 2^" + std::to_string(n_in) + " entries");
    for (const BitWord& v : f)
        if (v.width() != n_out) throw WidthMismatch("oracle entry width != output register");

    // Basis-state permutation: move each amplitude to its xored index.
    std::vector<std::complex<double>> out(amps_.size());
    for (std::uint64_t idx = 0; idx < amps_.size(); ++idx) {
        std::uint32_t x = 0;
        for (int k = 0; k < n_in; ++k)
            x = x << 1 | static_cast<std::uint32_t>((idx & index_bit(in_wires[k])) != 0);
        std::uint32_t patch = f[x].bits();
        std::uint64_t target = idx;
        for (int k = 0; k < n_out; ++k)
            if (patch >> (n_out - 1 - k) & 1) target ^= index_bit(out_wires[k]);
        out[target] = amps_[idx];
    }
    amps_ = std::move(out);
}

void StateVector::apply_classical_gate(const Gate& g) {
    check_wires(qubits_, g.wires());
    if (g.kind == GateKind::Swap) {
        const std::uint64_t bit_a = index_bit(g.targets[0]);
        const std::uint64_t bit_b = index_bit(g.targets[1]);
        for (std::uint64_t idx = 0; idx < amps_.size(); ++idx)
            if ((idx & bit_a) && !(idx & bit_b))
                std::swap(amps_[idx], amps_[idx ^ bit_a ^ bit_b]);
        return;
    }
    std::uint64_t control_mask = 0;
    for (int c : g.controls) control_mask |= index_bit(c);
    const std::uint64_t target = index_bit(g.targets[0]);
    for (std::uint64_t idx = 0; idx < amps_.size(); ++idx)
        if ((idx & control_mask) == control_mask && !(idx & target))
            std::swap(amps_[idx], amps_[idx | target]);
}

Distribution StateVector::measure_probabilities(std::span<const int> wires) const {
    check_wires(qubits_, wires);
    const int n = static_cast<int>(wires.size());
    Distribution d(n, Distribution::Kind::Probabilities);
    for (std::uint64_t idx = 0; idx < amps_.size(); ++idx) {
        double p = std::norm(amps_[idx]);
        if (p == 0.0) continue;
        std::uint32_t outcome = 0;
        for (int k = 0; k < n; ++k)
            outcome = outcome << 1 | static_cast<std::uint32_t>((idx & index_bit(wires[k])) != 0);
        d.add(outcome, p);
    }
    return d;
}

Distribution simon_closed_form(std::span<const BitWord> f, int n) {
    const std::uint32_t size = std::uint32_t{1} << n;
    if (f.size() != size) throw BadLength("f must have 2^n entries");

    // Bucket preimages by image value.
    std::vector<std::vector<std::uint32_t>> preimages(size);
    for (std::uint32_t x = 0; x < size; ++x) preimages[f[x].bits()].push_back(x);

    std::vector<double> probs(size, 0.0);
    const double scale = 1.0 / (static_cast<double>(size) * static_cast<double>(size));
    for (std::uint32_t y = 0; y < size; ++y) {
        std::int64_t total = 0;
        for (const auto& bucket : preimages) {
            if (bucket.empty()) continue;
            std::int64_t s = 0;
            for (std::uint32_t x : bucket)
                s += (std::popcount(x & y) & 1) ? -1 : 1;
            total += s * s;
        }
        probs[y] = static_cast<double>(total) * scale;
    }
    return Distribution::probabilities(n, std::move(probs));
}

Distribution simon_statevector(std::span<const BitWord> f, int n) {
    if (n > 12) throw InvalidArgument("statevector Simon path supports n <= 12");
    std::vector<int> in_wires(static_cast<size_t>(n)), out_wires(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        in_wires[static_cast<size_t>(i)] = i;
        out_wires[static_cast<size_t>(i)] = n + i;
    }
    StateVector sv(2 * n);
    sv.hadamard_layer(in_wires);
    sv.oracle_xor(f, in_wires, out_wires);
    sv.hadamard_layer(in_wires);
    return sv.measure_probabilities(in_wires);
}

Distribution simon_output_distribution(std::span<const BitWord> f, int n) {
    Distribution closed = simon_closed_form(f, n);
    Distribution simulated = simon_statevector(f, n);
    for (std::uint32_t y = 0; y < closed.size(); ++y)
        if (std::abs(closed.weight(y) - simulated.weight(y)) > 1e-9)
            throw InvalidArgument("closed form and statevector disagree at outcome " +
                                  BitWord(n, y).str());
    return closed;
}

Distribution sample(const Distribution& probs, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw InvalidArgument("shots must be >= 1");
    std::vector<double> p = probs.normalized();
    std::vector<double> cdf(p.size());
    double acc = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    auto gen = rng::stream(seed, "qsim.sample");
    Distribution out(probs.width(), Distribution::Kind::Counts);
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = rng::uniform01(gen);
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out.add(static_cast<std::uint32_t>(it - cdf.begin()));
    }
    return out;
}

PermTable simulate_circuit_unitary(const Circuit& c) {
    if (c.width > 12) throw InvalidArgument("unitary simulation supports width <= 12");
    const std::uint32_t size = std::uint32_t{1} << c.width;
    std::vector<std::uint16_t> table(size);
    for (std::uint32_t x = 0; x < size; ++x) {
        StateVector sv = StateVector::basis(c.width, x);
        for (const Gate& g : c.gates) sv.apply_classical_gate(g);
        int hits = 0;
        std::uint32_t image = 0;
        for (std::uint32_t idx = 0; idx < size; ++idx) {
            double p = std::norm(sv.amps()[idx]);
            if (p > 1e-9) {
                ++hits;
                image = idx;
                if (std::abs(p - 1.0) > 1e-9) hits = 2;
            }
        }
        if (hits != 1)
            throw NonPermutationGate("basis state " + std::to_string(x) +
                                     " did not map to a basis state");
        table[x] = static_cast<std::uint16_t>(image);
    }
    return PermTable(c.width, std::move(table));
}

}  // namespace emsim
