#ifndef EMSIM_CIRCUIT_HPP
#define EMSIM_CIRCUIT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "emsim/bitword.hpp"
#include "emsim/galois.hpp"

namespace emsim {

enum class GateKind { X, Cnot, Toffoli, Mcx, Swap };

/// Reversible gate over named wires. Controls are kept sorted; targets hold
/// one wire, or the two swapped wires for SWAP.
struct Gate {
    GateKind kind;
    std::vector<int> controls;
    std::vector<int> targets;

    static Gate x(int target);
    static Gate cnot(int control, int target);
    static Gate toffoli(int c0, int c1, int target);
    static Gate mcx(std::vector<int> controls, int target);  // picks kind by control count
    static Gate swap(int a, int b);

    std::vector<int> wires() const;
    bool is_clifford() const { return kind != GateKind::Toffoli && kind != GateKind::Mcx; }

    bool operator==(const Gate&) const = default;
};

struct Circuit {
    int width = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int width);

    void append(Gate g);  // validates wires against width
};

/// Per-kind schedule costs. Defaults: X and CNOT are single layers, SWAP is
/// three CNOTs, a Toffoli decomposes to depth 7 with one T-layer, and a
/// k-control MCX is costed as a ladder of 2k-3 Toffolis.
struct CostTable {
    int x_depth = 1;
    int cnot_depth = 1;
    int swap_depth = 3;
    int toffoli_depth = 7;
    int toffoli_t_depth = 1;

    int mcx_depth(int k) const { return toffoli_depth * (2 * k - 3); }
    int mcx_t_depth(int k) const { return toffoli_t_depth * (2 * k - 3); }

    int depth_cost(const Gate& g) const;
    int t_depth_cost(const Gate& g) const;
};

/// Classical reversible semantics: X flips its target, controlled gates flip
/// the target iff all controls are set, SWAP exchanges two bit positions.
BitWord apply_gate_classical(const Gate& g, const BitWord& bits);

/// Applies the gate list left to right to every basis value.
PermTable truth_table(const Circuit& c);

/// Greedy as-soon-as-possible layering on wire conflicts; each layer costs
/// the max per-gate depth among its gates. Trailing SWAPs (nothing after
/// them on either wire) are free relabelings.
int depth(const Circuit& c, const CostTable& costs = {});

/// Same schedule with only the non-Clifford costs counted: a layer of
/// parallel Toffolis is one T layer, Clifford-only layers are free.
int t_depth(const Circuit& c, const CostTable& costs = {});

/// Circuit with the gate list reversed; inverts the permutation since every
/// gate in the vocabulary is an involution.
Circuit reversed(const Circuit& c);

// One gate per line ("X 0", "CNOT 2 0", "TOF 0 1 2", "MCX 0 1 2 3",
// "SWAP 0 1"), controls first and target last, '#' comments, first
// non-comment line "WIDTH n".
Circuit read_circuit(std::istream& in);
Circuit read_circuit_file(const std::string& path);
void write_circuit(std::ostream& out, const Circuit& c);
std::string circuit_to_string(const Circuit& c);

}  // namespace emsim

#endif
