#pragma once

#include <functional>

namespace qftatlas {

struct UnitSchedule {
    // QFT-IA on whatever unit currently sits in `slot`.
    std::function<void(int slot)> ia;
    // QFT-IE between slots a and a+1, followed by the unit swap when `exchange` is set.
    std::function<void(int a, bool exchange)> crossing;
    // Optional; runs before the crossings of each round (1-based).
    std::function<void(int round)> round_start;
};

// Runs the LNN triangle pattern over `units` slots, treating each unit as one qubit: slot-0
// contents are IA'd when they arrive, every pair of units crosses exactly once.
// With `skip_last_exchange` the final crossing leaves the two units in place.
void run_unit_lnn(int units, const UnitSchedule& s, bool skip_last_exchange);

} // namespace qftatlas
