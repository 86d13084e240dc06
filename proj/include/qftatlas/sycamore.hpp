#pragma once

#include <vector>

#include "qftatlas/builder.hpp"
#include "qftatlas/circuit.hpp"

namespace qftatlas {

// Serpentine line of the two-row unit in `slot`: p -> (2*slot + p%2, p/2).
std::vector<int> syc_unit_line(const CouplingGraph& g, int slot);

// Exchanges the units in `slot` and `slot + 1` in three SWAP layers. With `same_position`, the
// pairs holding equal line positions are CPHASEd while they sit vertically adjacent (one extra
// layer, no extra SWAPs).
void syc_unit_swap(Builder& b, int slot, bool same_position = false);

enum class SycDetour {
    None,       // skip the same-position pairs
    Horizontal, // two rounds of in-unit swap / CPHASE / swap back, 6 layers
    Vertical,   // middle-row swap / CPHASE / swap back, 3 layers
};

struct SycIeOptions {
    int slot = 0; // upper unit; the lower unit is slot + 1
    Mode mode = Mode::Relaxed;
    SycDetour detour = SycDetour::Horizontal; // relaxed only
};

// All cross pairs between the two units; both units come out mirrored.
// Relaxed: detour, then unit-length rounds of synchronized brick-wall swaps with a CPHASE on
// the boundary link before and after each swap.
// Strict: the same synchronized swaps driven by the LNN triangle over line positions, so every
// qubit meets the other unit in rank order; same-position pairs are taken at the top.
void syc_ie(Builder& b, const SycIeOptions& opts);

// Logical layout over the units first_unit .. first_unit+units-1 (all remaining units when
// `units` is negative): unit u holds its block of 2m ranks along the serpentine line, forward
// on even u and backward on odd u. A single unit gets the interleaved LNN start.
std::vector<int> syc_initial_mapping(int m, int first_unit = 0, int units = -1);

// QFT confined to a contiguous band of units; everything outside it is left untouched.
ScheduledCircuit syc_qft_span(int m, Mode mode, int first_unit, int units, ArchDescriptor arch);

ScheduledCircuit syc_qft(int m, Mode mode);

} // namespace qftatlas
