#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qftatlas/circuit.hpp"
#include "qftatlas/topology.hpp"

namespace qftatlas {

// Published depth/SWAP reference figures, kept as data for comparison only.
struct ReferenceRow {
    ArchKind kind;
    int size;
    int depth;
    int swaps;
};

const std::vector<ReferenceRow>& reference_table();
// References apply to relaxed-mode runs.
std::optional<ReferenceRow> reference_for(ArchKind kind, int size, Mode mode);

struct BenchRow {
    ArchKind arch = ArchKind::LNN;
    int size = 0;
    Mode mode = Mode::Strict;
    int depth = 0;
    long long swaps = 0;
    long long cphases = 0;
    double depth_per_qubit = 0;
    std::optional<int> paper_depth;
    std::optional<int> paper_swaps;
    std::optional<double> depth_deviation_pct;
    std::optional<double> swap_deviation_pct;
};

struct BenchJob {
    ArchKind arch;
    int size;
    Mode mode;
};

// Generates and verifies every job (in parallel), rows in job order. Throws std::runtime_error
// if any circuit fails verification.
std::vector<BenchRow> run_bench(const std::vector<BenchJob>& jobs, int threads = 0);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_markdown(const std::vector<BenchRow>& rows);

} // namespace qftatlas
