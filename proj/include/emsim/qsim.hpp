#ifndef EMSIM_QSIM_HPP
#define EMSIM_QSIM_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "emsim/bitword.hpp"
#include "emsim/circuit.hpp"
#include "emsim/distribution.hpp"

namespace emsim {

/// Exact complex statevector over up to 24 qubits. Wire 0 is the most
/// significant amplitude-index bit, matching the BitWord convention.
class StateVector {
public:
    explicit StateVector(int qubits);  // |0...0>
    static StateVector basis(int qubits, std::uint32_t index);

    int qubits() const { return qubits_; }
    std::span<const std::complex<double>> amps() const { return amps_; }
    double norm() const;

    void hadamard(int wire);
    void hadamard_layer(std::span<const int> wires);

    /// |x>|a> -> |x>|a ^ f(x)> on the listed wire registers; f has 2^|in|
    /// entries of width |out|. Registers must be disjoint.
    void oracle_xor(std::span<const BitWord> f, std::span<const int> in_wires,
                    std::span<const int> out_wires);

    /// X/CNOT/TOFFOLI/MCX/SWAP as exact basis permutations.
    void apply_classical_gate(const Gate& g);

    /// Measurement probabilities of the listed wires (marginal).
    Distribution measure_probabilities(std::span<const int> wires) const;

private:
    std::uint64_t index_bit(int wire) const { return std::uint64_t{1} << (qubits_ - 1 - wire); }

    int qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Exact Simon output distribution over the input register, computed both by
/// full 2n-qubit statevector simulation and by the closed-form interference
/// sum; the two must agree within 1e-9 or the call throws. Returns the
/// closed-form values (dyadic, exact in double).
Distribution simon_output_distribution(std::span<const BitWord> f, int n);

/// Closed form alone: Pr[y] = 2^-2n * sum_z |sum_{x:f(x)=z} (-1)^(x.y)|^2.
Distribution simon_closed_form(std::span<const BitWord> f, int n);

/// Statevector path alone (prepare, H, U_f, H, measure input register).
Distribution simon_statevector(std::span<const BitWord> f, int n);

/// Multinomial counts from exact probabilities, deterministic per seed.
Distribution sample(const Distribution& probs, std::uint64_t shots, std::uint64_t seed);

/// Runs every basis state through the statevector simulator and reads the
/// resulting permutation; throws NonPermutationGate if any output is not a
/// basis state. Cross-validates synth::truth_table.
PermTable simulate_circuit_unitary(const Circuit& c);

}  // namespace emsim

#endif
