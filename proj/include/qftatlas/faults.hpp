#pragma once

#include <vector>

#include "qftatlas/circuit.hpp"

namespace qftatlas {

struct FaultModel {
    std::vector<int> faulty; // physical indices
};

// Heavy-hex with faulty danglers. The faulty danglers drop out of the virtual line, so each
// surviving dangler exchanges with the next available one along the path. Path faults are
// rejected. No faults gives exactly hh_qft(n, mode).
ScheduledCircuit hh_qft_faulty(int n, const FaultModel& faults, Mode mode);

struct SycFaultPlan {
    int faulty_unit = -1;
    int faulty_row = -1;
    int buffer_row = -1;
    int first_unit = 0; // surviving units, contiguous
    int units = 0;
};

// Which rows and units a fault set takes out; throws ParameterError("faulty", ...) when the
// faults do not fit the single-unit model or leave fewer than two units.
SycFaultPlan syc_fault_plan(int m, const FaultModel& faults);

// Sycamore with all faults inside one two-row unit: the faulty row and its buffer row are left
// out and the QFT runs over the remaining units. `corridor` would allow SWAP-only transit
// through the buffer row; the supported layouts never need it.
ScheduledCircuit syc_qft_faulty(int m, const FaultModel& faults, Mode mode, bool corridor = false);

} // namespace qftatlas
