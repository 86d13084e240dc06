#pragma once

#include <vector>

#include "qftatlas/builder.hpp"
#include "qftatlas/circuit.hpp"

namespace qftatlas {

enum class LnnPattern {
    Natural,     // ascending start, depth 4n-4
    Interleaved, // start from lnn_interleaved_layout, depth 4n-6 for n >= 4
};

struct LnnOptions {
    int n = 1;
    int physical_offset = 0;
    bool reverse_orientation = false;
    LnnPattern pattern = LnnPattern::Interleaved;
};

// Position -> index into the ascending logical order. Identity when the interleaved start does
// not apply (n < 4).
std::vector<int> lnn_interleaved_layout(int n);

// Position-level sink for the LNN pattern; edge i joins positions i and i+1.
class LineOps {
public:
    virtual ~LineOps() = default;
    virtual void h(int pos) = 0;
    virtual void cp(int edge) = 0;
    virtual void swap(int edge) = 0;
};

void emit_lnn_pattern(int n, LnnPattern pattern, LineOps& ops);

// QFT over the qubits sitting on `line`. With Natural, logical indices must ascend along the
// line; with Interleaved they must follow lnn_interleaved_layout. Ends with the line reversed.
void emit_lnn(Builder& b, const std::vector<int>& line, LnnPattern pattern);

// Standalone circuit on LNN(physical_offset + n) with logical qubits 0..n-1 on the segment.
ScheduledCircuit lnn_qft(const LnnOptions& opts, Mode mode = Mode::Strict);
ScheduledCircuit lnn_qft(int n, Mode mode = Mode::Strict);

// Line of `phys` reordered so the logical contents ascend; throws if they are not monotone.
std::vector<int> ascending_line(const Builder& b, const std::vector<int>& phys);

} // namespace qftatlas
