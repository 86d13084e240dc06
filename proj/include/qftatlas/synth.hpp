#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qftatlas/circuit.hpp"

namespace qftatlas {

// A hole is a named integer unknown with a finite inclusive domain.
struct Hole {
    std::string name;
    int lo = 0;
    int hi = 0;
};

// Either a hole reference or a fixed value.
struct Slot {
    int hole = -1;
    int value = 0;
    static Slot fixed(int v) { return {-1, v}; }
    static Slot of(int h) { return {h, 0}; }
};

// coef*i + mult*L + off, with i the loop variable and L the instance size.
struct Term {
    Slot coef, mult, off;
};

enum class ExprKind { Affine, Mod2, Min };

struct Expr {
    ExprKind kind = ExprKind::Affine;
    Term t1, t2; // t2 only for Min
};

enum class StmtKind {
    CpLinks,  // CPHASE on cross links [lo, hi)
    CpLine,   // CPHASE on line pairs (p, p+1), p = beg, beg+2, ... < end
    SwapLine, // SWAP on line pairs, same indexing
};

struct Statement {
    StmtKind kind = StmtKind::SwapLine;
    int unit = 0; // line statements only
    int step = 1; // CpLinks only
    Expr lo, hi;  // beg/end for line statements
};

struct SketchTemplate {
    std::string shape;
    Expr iterations; // evaluated at i = 0
    std::vector<Statement> body;
    std::vector<Hole> holes;
};

struct LinePos {
    int unit = 0;
    int index = 0;
};

struct CrossLink {
    LinePos a, b;
};

struct SynthSpec {
    int size = 0;                   // L
    std::vector<int> unit_length;   // one line, or two units
    std::vector<CrossLink> links;   // in cphase_range index order
    Mode mode = Mode::Relaxed;
    bool allow_duplicates = false;
    bool exclude_same_position = false;
    bool second_descending = false; // second unit's ranks run against its line
};

struct Verdict {
    bool ok = false;
    int failing_iteration = -1; // -1: ran to the end
    std::string reason;
};

struct HoleAssignment {
    std::vector<int> values; // one per hole, in declaration order
    Verdict verdict;
    std::vector<int> sizes_tested;
};

struct SolveOptions {
    int limit = 1;
    std::uint64_t cap = 100000000ULL;
    bool prune = true;
    int threads = 0; // 0: hardware concurrency
};

class SearchSpaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs one candidate. Without pruning the whole fragment is simulated before judging; the
// verdict is the same, only the failing iteration may be reported later.
Verdict evaluate(const SketchTemplate& sketch, const SynthSpec& spec, const std::vector<int>& values,
                 bool prune = true);

std::uint64_t search_space(const SketchTemplate& sketch);

// Satisfying assignments in lexicographic order (first hole most significant), up to limit.
std::vector<HoleAssignment> solve(const SketchTemplate& sketch, const SynthSpec& spec,
                                  const SolveOptions& opts = {});

struct SizeCheck {
    int size = 0;
    Verdict verdict;
};

struct GeneralizationReport {
    std::vector<SizeCheck> checks;
    bool generalizing = true;
};

// Shapes: lnn, grid-ie-strict, grid-ie-relaxed, syc-ie-strict, syc-ie-relaxed.
const std::vector<std::string>& synth_shapes();
// `with_mod` = false swaps the mod-2 starts for plain affine ones.
SketchTemplate sketch_for(const std::string& shape, bool with_mod = true);
SynthSpec spec_for(const std::string& shape, int size);

GeneralizationReport cross_validate(const HoleAssignment& assignment, const SketchTemplate& sketch,
                                    const std::string& shape, const std::vector<int>& sizes);

int eval_expr(const Expr& e, const std::vector<int>& values, int i, int size);
std::string to_string(const Expr& e, const SketchTemplate& sketch, const std::vector<int>& values);

} // namespace qftatlas
