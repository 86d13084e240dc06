#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qftatlas/topology.hpp"

namespace qftatlas {

enum class Mode { Strict, Relaxed };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

enum class Gate : std::uint8_t { H, CP, SWAP };

struct PlacedOp {
    Gate gate = Gate::H;
    // H: l0. CP: l0 < l1. SWAP: both -1.
    int l0 = -1;
    int l1 = -1;
    // H: p0. CP/SWAP: p0, p1.
    int p0 = -1;
    int p1 = -1;
    int k = 0;

    static PlacedOp h(int logical, int phys) { return {Gate::H, logical, -1, phys, -1, 0}; }
    static PlacedOp cp(int la, int lb, int pa, int pb);
    static PlacedOp swap(int pa, int pb) { return {Gate::SWAP, -1, -1, pa, pb, 0}; }

    int arity() const { return gate == Gate::H ? 1 : 2; }
    bool operator==(const PlacedOp&) const = default;
};

using Layer = std::vector<PlacedOp>;

struct ArchDescriptor {
    ArchKind kind = ArchKind::LNN;
    int size = 1;
    std::vector<int> faulty;
    bool operator==(const ArchDescriptor&) const = default;
};

// log_to_phys[l] = physical index of logical qubit l.
struct Mapping {
    std::vector<int> log_to_phys;
    bool operator==(const Mapping&) const = default;
};

struct ScheduledCircuit {
    ArchDescriptor arch;
    Mode mode = Mode::Relaxed;
    Mapping initial_mapping;
    std::vector<Layer> layers;
    bool operator==(const ScheduledCircuit&) const = default;

    int logical_count() const { return static_cast<int>(initial_mapping.log_to_phys.size()); }
};

struct Metrics {
    int depth = 0;
    long long swap_count = 0;
    long long cphase_count = 0;
    long long h_count = 0;
    Mapping final_mapping;
};

class CircuitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

CouplingGraph graph_for(const ArchDescriptor& arch);

// Checks disjointness, links and mapping consistency against the mapping reached by replaying
// the circuit so far. Throws CircuitError.
void append_layer(ScheduledCircuit& circuit, const CouplingGraph& graph, Layer layer);

// Mapping after replaying every layer.
Mapping final_mapping(const ScheduledCircuit& circuit, int node_count);

Metrics metrics(const ScheduledCircuit& circuit);

std::string export_json(const ScheduledCircuit& circuit);
ScheduledCircuit import_json(const std::string& text);
std::string export_qasm(const ScheduledCircuit& circuit);

} // namespace qftatlas
