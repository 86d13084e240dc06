#include "qftatlas/lnn.hpp"

#include <algorithm>
#include <stdexcept>

namespace qftatlas {

namespace {

bool interleaved_applies(int n) { return n >= 4; }

} // namespace

std::vector<int> lnn_interleaved_layout(int n) {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[i] = i;
    if (interleaved_applies(n)) {
        std::swap(pos[0], pos[1]);
        std::swap(pos[n - 2], pos[n - 1]);
    }
    return pos;
}

void emit_lnn_pattern(int n, LnnPattern pattern, LineOps& ops) {
    if (n < 1) throw std::invalid_argument("emit_lnn: empty line");
    if (n == 1) {
        ops.h(0);
        return;
    }
    const bool inter = pattern == LnnPattern::Interleaved && interleaved_applies(n);
    const int rounds = 2 * n - 3;
    if (inter) {
        // bottom pair starts swapped; restore it while the pattern has not reached it
        ops.swap(n - 2);
        ops.h(1);
    } else {
        ops.h(0);
    }
    for (int r = 1; r <= rounds; ++r) {
        const int hi = std::min(r - 1, 2 * n - 3 - r);
        for (int p = (r - 1) % 2; p <= hi; p += 2) {
            ops.cp(p);
            const bool skip = inter && p == 0 && (r == 1 || r == rounds);
            if (!skip) ops.swap(p);
        }
        if ((r - 1) % 2 == 0) ops.h(inter && r == rounds ? 1 : 0);
        if (inter && r == n) ops.swap(n - 2);
    }
}

namespace {

class PhysicalLine : public LineOps {
public:
    PhysicalLine(Builder& b, const std::vector<int>& line) : b_(b), line_(line) {}
    void h(int pos) override { b_.h(line_[pos]); }
    void cp(int e) override { b_.cp(line_[e], line_[e + 1]); }
    void swap(int e) override { b_.swap(line_[e], line_[e + 1]); }

private:
    Builder& b_;
    const std::vector<int>& line_;
};

} // namespace

void emit_lnn(Builder& b, const std::vector<int>& line, LnnPattern pattern) {
    const int n = static_cast<int>(line.size());
    if (n == 0) throw std::invalid_argument("emit_lnn: empty line");
    for (int i = 0; i + 1 < n; ++i)
        if (!b.graph().has_edge(line[i], line[i + 1]))
            throw std::invalid_argument("emit_lnn: segment is not a path");
    PhysicalLine ops(b, line);
    emit_lnn_pattern(n, pattern, ops);
}

ScheduledCircuit lnn_qft(const LnnOptions& opts, Mode mode) {
    if (opts.n < 1) throw ParameterError("n", "lnn: n must be >= 1");
    if (opts.physical_offset < 0) throw ParameterError("offset", "lnn: negative offset");
    const int total = opts.physical_offset + opts.n;
    CouplingGraph g = build_architecture(ArchKind::LNN, total);
    std::vector<int> line(opts.n);
    for (int i = 0; i < opts.n; ++i) line[i] = opts.physical_offset + i;
    if (opts.reverse_orientation) std::reverse(line.begin(), line.end());

    std::vector<int> init(opts.n);
    std::vector<int> layout = lnn_interleaved_layout(opts.n);
    for (int p = 0; p < opts.n; ++p)
        init[opts.pattern == LnnPattern::Interleaved ? layout[p] : p] = line[p];

    Builder b(g, init);
    emit_lnn(b, line, opts.pattern);
    return std::move(b).finish({ArchKind::LNN, total, {}}, mode);
}

ScheduledCircuit lnn_qft(int n, Mode mode) { return lnn_qft(LnnOptions{n, 0, false}, mode); }

std::vector<int> ascending_line(const Builder& b, const std::vector<int>& phys) {
    std::vector<int> line = phys;
    if (line.size() >= 2 && b.logical_at(line.front()) > b.logical_at(line.back()))
        std::reverse(line.begin(), line.end());
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
        if (b.logical_at(line[i]) < 0 || b.logical_at(line[i]) > b.logical_at(line[i + 1]))
            throw std::logic_error("ascending_line: unit contents are not monotone");
    return line;
}

} // namespace qftatlas
