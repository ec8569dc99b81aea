#ifndef EMSIM_SYNTH_HPP
#define EMSIM_SYNTH_HPP

#include "emsim/circuit.hpp"
#include "emsim/galois.hpp"

namespace emsim {

/// Bidirectional transformation-based synthesis: walk the truth table in
/// index order and fix each row with multi-controlled X gates from whichever
/// side (input or output) is cheaper, then cancel adjacent identical gates.
/// Working set is O(2^n); truth_table(synthesize(p)) == p for every
/// bijection. Depth optimality is not attempted.
Circuit synthesize(const PermTable& p);

/// Removes adjacent identical gates (every vocabulary gate is an involution)
/// until a fixpoint. Returns the number of gates removed.
int peephole_cancel(Circuit& c);

}  // namespace emsim

#endif
