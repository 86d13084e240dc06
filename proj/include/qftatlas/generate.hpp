#pragma once

#include <vector>

#include "qftatlas/circuit.hpp"
#include "qftatlas/topology.hpp"

namespace qftatlas {

struct GenRequest {
    ArchKind kind = ArchKind::LNN;
    int size = 1;
    Mode mode = Mode::Strict;
    std::vector<int> faulty;
    bool corridor = false;
};

// Dispatches to the scheduler for the architecture; faults go through the fault-aware
// generators (heavy-hex and Sycamore only). Throws ParameterError on bad sizes or faults.
ScheduledCircuit generate(const GenRequest& req);

} // namespace qftatlas
