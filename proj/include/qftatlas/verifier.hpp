#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qftatlas/circuit.hpp"
#include "qftatlas/topology.hpp"

namespace qftatlas {

struct Finding {
    int layer = -1; // -1 when not tied to a layer
    std::vector<int> qubits;
    std::string detail;
};

struct FindingList {
    std::vector<Finding> items;
    long long total = 0;
    bool empty() const { return total == 0; }
};

struct VerificationReport {
    bool ok = false;
    FindingList connectivity_violations;
    FindingList overlap_violations;
    FindingList mapping_violations;
    FindingList dependency_violations;
    FindingList completeness_violations;
    Metrics metrics;

    std::string to_json() const;
};

struct VerifyOptions {
    std::size_t cap = 100;
    // Empty means every logical qubit of the circuit.
    std::optional<std::vector<int>> expected_logical;
};

VerificationReport verify(const ScheduledCircuit& circuit, const CouplingGraph& graph, Mode mode,
                          const VerifyOptions& opts = {});

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

// Throws IoError or SchemaError before any verification happens.
VerificationReport verify_file(const std::string& path, std::optional<Mode> mode_override = {});

} // namespace qftatlas
