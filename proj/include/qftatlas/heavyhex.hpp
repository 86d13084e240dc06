#pragma once

#include <vector>

#include "qftatlas/builder.hpp"
#include "qftatlas/circuit.hpp"

namespace qftatlas {

// Column c of the unit grid: on-path group 4c..4c+3 followed by its dangler, as a 5-qubit path.
std::vector<int> hh_column_path(const CouplingGraph& g, int column);

// Exchanges on-path groups `group` and `group + 1` by block crossing on their 8-qubit segment,
// CPHASEing each pair as it meets. With `with_dangler`, every qubit arriving at the anchor of
// `group` is also CPHASEd with that group's dangler.
void hh_on_path_unit_swap(Builder& b, int group, bool with_dangler = true);

// Exchanges the danglers of `group` and `group + 1` through the on-path group `group + 1`
// (the via unit). The dangler coming from the right meets every via qubit and the other dangler
// on its way; every via qubit ends where it started. 11 SWAPs.
void hh_off_path_unit_swap(Builder& b, int group);

// Logical layout: column c holds 5c .. 5c+4 along hh_column_path.
std::vector<int> hh_initial_mapping(int n);

// Relaxed: LNN pattern over columns, one on-path swap plus one off-path swap per crossing.
// With `phase_barriers` (relaxed only) the unit swaps of a round start together, once every
// column taking part is free, so each phase costs its full on-path plus off-path length.
// Idle columns are not held back.
// Strict: LNN pattern over a virtual line in which every anchor/dangler pair acts as two
// neighbouring positions, with the anchor slot handed to whichever one the next gate needs.
ScheduledCircuit hh_qft(int n, Mode mode, bool phase_barriers = true);

// The strict scheme on its own, with the listed danglers left out of the virtual line (sorted,
// distinct; they are recorded as faulty). Valid for either mode.
ScheduledCircuit hh_fat_line_qft(int n, Mode mode, const std::vector<int>& faulty_danglers);

} // namespace qftatlas
