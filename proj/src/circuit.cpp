#include "emsim/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace emsim {

namespace {

void check_distinct(const std::vector<int>& wires) {
    std::vector<int> sorted = wires;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("gate wires must be distinct");
    if (!sorted.empty() && sorted.front() < 0)
        throw InvalidArgument("negative wire index");
}

Gate make(GateKind kind, std::vector<int> controls, std::vector<int> targets) {
    std::sort(controls.begin(), controls.end());
    Gate g{kind, std::move(controls), std::move(targets)};
    check_distinct(g.wires());
    return g;
}

}  // namespace

Gate Gate::x(int target) { return make(GateKind::X, {}, {target}); }

Gate Gate::cnot(int control, int target) { return make(GateKind::Cnot, {control}, {target}); }

Gate Gate::toffoli(int c0, int c1, int target) {
    return make(GateKind::Toffoli, {c0, c1}, {target});
}

Gate Gate::mcx(std::vector<int> controls, int target) {
    switch (controls.size()) {
        case 0: return x(target);
        case 1: return cnot(controls[0], target);
        case 2: return toffoli(controls[0], controls[1], target);
        default: return make(GateKind::Mcx, std::move(controls), {target});
    }
}

Gate Gate::swap(int a, int b) {
    if (a > b) std::swap(a, b);
    return make(GateKind::Swap, {}, {a, b});
}

std::vector<int> Gate::wires() const {
    std::vector<int> all = controls;
    all.insert(all.end(), targets.begin(), targets.end());
    return all;
}

Circuit::Circuit(int width) : width(width) {
    if (width < 1 || width > BitWord::kMaxWidth)
        throw InvalidArgument("circuit width out of range: " + std::to_string(width));
}

void Circuit::append(Gate g) {
    for (int w : g.wires())
        if (w >= width)
            throw InvalidArgument("wire " + std::to_string(w) + " >= circuit width " +
                                  std::to_string(width));
    gates.push_back(std::move(g));
}

int CostTable::depth_cost(const Gate& g) const {
    switch (g.kind) {
        case GateKind::X: return x_depth;
        case GateKind::Cnot: return cnot_depth;
        case GateKind::Toffoli: return toffoli_depth;
        case GateKind::Mcx: return mcx_depth(static_cast<int>(g.controls.size()));
        case GateKind::Swap: return swap_depth;
    }
    return 0;
}

int CostTable::t_depth_cost(const Gate& g) const {
    switch (g.kind) {
        case GateKind::Toffoli: return toffoli_t_depth;
        case GateKind::Mcx: return mcx_t_depth(static_cast<int>(g.controls.size()));
        default: return 0;
    }
}

BitWord apply_gate_classical(const Gate& g, const BitWord& bits) {
    if (g.kind == GateKind::Swap) {
        int a = g.targets[0], b = g.targets[1];
        int va = bits.bit(a), vb = bits.bit(b);
        return bits.with_bit(a, vb).with_bit(b, va);
    }
    for (int c : g.controls)
        if (!bits.bit(c)) return bits;
    return bits.with_bit(g.targets[0], bits.bit(g.targets[0]) ^ 1);
}

PermTable truth_table(const Circuit& c) {
    std::vector<std::uint16_t> table(size_t{1} << c.width);
    for (std::uint32_t x = 0; x < table.size(); ++x) {
        BitWord v(c.width, x);
        for (const Gate& g : c.gates) v = apply_gate_classical(g, v);
        table[x] = static_cast<std::uint16_t>(v.bits());
    }
    return PermTable(c.width, std::move(table));
}

namespace {

// One greedy ASAP schedule over wire conflicts; each layer contributes its
// max cost under whichever cost view is requested.
int layered_cost(const Circuit& c, const CostTable& costs, bool t_view) {
    std::vector<int> wire_layer(static_cast<size_t>(c.width), 0);
    std::map<int, int> layer_max;

    // Trailing SWAPs are wire relabelings, not schedule work.
    std::vector<bool> trailing(c.gates.size(), false);
    std::vector<bool> used(static_cast<size_t>(c.width), false);
    for (size_t i = c.gates.size(); i-- > 0;) {
        const Gate& g = c.gates[i];
        bool clean = g.kind == GateKind::Swap;
        for (int w : g.wires())
            if (used[static_cast<size_t>(w)]) clean = false;
        if (clean) trailing[i] = true;
        for (int w : g.wires()) used[static_cast<size_t>(w)] = true;
    }

    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        int layer = 0;
        for (int w : g.wires()) layer = std::max(layer, wire_layer[static_cast<size_t>(w)]);
        ++layer;
        for (int w : g.wires()) wire_layer[static_cast<size_t>(w)] = layer;
        int cost = t_view ? costs.t_depth_cost(g) : (trailing[i] ? 0 : costs.depth_cost(g));
        int& slot = layer_max[layer];
        slot = std::max(slot, cost);
    }

    int total = 0;
    for (auto& [layer, cost] : layer_max) total += cost;
    return total;
}

}  // namespace

int depth(const Circuit& c, const CostTable& costs) { return layered_cost(c, costs, false); }

int t_depth(const Circuit& c, const CostTable& costs) { return layered_cost(c, costs, true); }

Circuit reversed(const Circuit& c) {
    Circuit out(c.width);
    out.gates.assign(c.gates.rbegin(), c.gates.rend());
    return out;
}

Circuit read_circuit(std::istream& in) {
    std::string line;
    int width = -1;
    Circuit circuit;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string op;
        if (!(fields >> op)) continue;
        std::vector<int> args;
        for (int v; fields >> v;) args.push_back(v);
        if (!fields.eof())
            throw ParseError("line " + std::to_string(lineno) + ": bad wire index");

        auto arity = [&](size_t min_args) {
            if (args.size() < min_args)
                throw ParseError("line " + std::to_string(lineno) + ": " + op +
                                 " needs at least " + std::to_string(min_args) + " wires");
        };
        if (op == "WIDTH") {
            arity(1);
            if (width != -1) throw ParseError("duplicate WIDTH line");
            width = args[0];
            circuit = Circuit(width);
            continue;
        }
        if (width == -1) throw ParseError("first directive must be WIDTH");
        if (op == "X") {
            arity(1);
            circuit.append(Gate::x(args[0]));
        } else if (op == "CNOT") {
            arity(2);
            circuit.append(Gate::cnot(args[0], args[1]));
        } else if (op == "TOF") {
            arity(3);
            circuit.append(Gate::toffoli(args[0], args[1], args[2]));
        } else if (op == "MCX") {
            arity(4);
            int target = args.back();
            args.pop_back();
            circuit.append(Gate::mcx(std::move(args), target));
        } else if (op == "SWAP") {
            arity(2);
            circuit.append(Gate::swap(args[0], args[1]));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown gate '" + op + "'");
        }
    }
    if (width == -1) throw ParseError("missing WIDTH line");
    return circuit;
}

Circuit read_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open circuit file: " + path);
    return read_circuit(in);
}

void write_circuit(std::ostream& out, const Circuit& c) {
    out << "WIDTH " << c.width << "\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::X: out << "X " << g.targets[0]; break;
            case GateKind::Cnot: out << "CNOT " << g.controls[0] << " " << g.targets[0]; break;
            case GateKind::Toffoli:
                out << "TOF " << g.controls[0] << " " << g.controls[1] << " " << g.targets[0];
                break;
            case GateKind::Mcx:
                out << "MCX";
                for (int w : g.controls) out << " " << w;
                out << " " << g.targets[0];
                break;
            case GateKind::Swap: out << "SWAP " << g.targets[0] << " " << g.targets[1]; break;
        }
        out << "\n";
    }
}

std::string circuit_to_string(const Circuit& c) {
    std::ostringstream out;
    write_circuit(out, c);
    return out.str();
}

}  // namespace emsim
