#include "emsim/synth.hpp"

#include <bit>
#include <cstdint>

namespace emsim {

namespace {

// Gates that rewrite value `from` into value `to`, raising bits with the
// still-set `from` bits as controls and lowering with the `to` bits. Chosen
// so no value below the row being fixed has every control set.
void transform_gates(int n, std::uint32_t from, std::uint32_t to,
                     std::vector<Gate>& out) {
    auto controls_from_mask = [&](std::uint32_t mask) {
        std::vector<int> controls;
        for (int i = 0; i < n; ++i)
            if (mask >> (n - 1 - i) & 1) controls.push_back(i);
        return controls;
    };
    std::uint32_t raise = to & ~from;
    std::uint32_t lower = from & ~to;
    for (int i = 0; i < n; ++i)
        if (raise >> (n - 1 - i) & 1)
            out.push_back(Gate::mcx(controls_from_mask(from), i));
    for (int i = 0; i < n; ++i)
        if (lower >> (n - 1 - i) & 1)
            out.push_back(Gate::mcx(controls_from_mask(to), i));
}

int route_cost(std::uint32_t from, std::uint32_t to) {
    // gates plus total controls, the usual bidirectional tie metric
    int raise = std::popcount(to & ~from);
    int lower = std::popcount(from & ~to);
    return raise * (1 + std::popcount(from)) + lower * (1 + std::popcount(to));
}

std::uint32_t apply_to_value(const Gate& g, std::uint32_t v, int n) {
    return apply_gate_classical(g, BitWord(n, v)).bits();
}

}  // namespace

Circuit synthesize(const PermTable& p) {
    int n = p.n();
    if (n > 8) throw InvalidArgument("synthesis supports n <= 8");
    std::uint32_t size = p.size();

    std::vector<std::uint32_t> table(size), inverse(size);
    for (std::uint32_t x = 0; x < size; ++x) {
        table[x] = p[x];
        inverse[p[x]] = x;
    }

    std::vector<Gate> input_side;   // application order, front of the circuit
    std::vector<Gate> output_side;  // application order, reversed onto the back

    for (std::uint32_t i = 0; i < size; ++i) {
        std::uint32_t y = table[i];
        if (y == i) continue;
        std::uint32_t j = inverse[i];

        std::vector<Gate> gates;
        if (route_cost(y, i) <= route_cost(i, j)) {
            // Output side: map the value y to i after the circuit.
            transform_gates(n, y, i, gates);
            for (const Gate& g : gates) {
                for (std::uint32_t x = 0; x < size; ++x)
                    table[x] = apply_to_value(g, table[x], n);
                output_side.push_back(g);
            }
        } else {
            // Input side: route row i to the row j currently holding value i.
            // Residual composition puts the last-applied gate innermost, so
            // walk the route backwards to keep the i -> j value path intact.
            transform_gates(n, i, j, gates);
            for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
                // h is an involution; permuting inputs swaps table entries.
                for (std::uint32_t x = 0; x < size; ++x) {
                    std::uint32_t hx = apply_to_value(*it, x, n);
                    if (x < hx) std::swap(table[x], table[hx]);
                }
                input_side.push_back(*it);
            }
        }
        for (std::uint32_t x = 0; x < size; ++x) inverse[table[x]] = x;
    }

    Circuit circuit(n);
    for (const Gate& g : input_side) circuit.append(g);
    for (auto it = output_side.rbegin(); it != output_side.rend(); ++it) circuit.append(*it);
    peephole_cancel(circuit);
    return circuit;
}

int peephole_cancel(Circuit& c) {
    int removed = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < c.gates.size(); ++i) {
            if (c.gates[i] == c.gates[i + 1]) {
                c.gates.erase(c.gates.begin() + static_cast<std::ptrdiff_t>(i),
                              c.gates.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                removed += 2;
                changed = true;
                break;
            }
        }
    }
    return removed;
}

}  // namespace emsim
