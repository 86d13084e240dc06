#include "qftatlas/heavyhex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qftatlas/crossing.hpp"
#include "qftatlas/lnn.hpp"
#include "qftatlas/unit_driver.hpp"

namespace qftatlas {

namespace {

void require_heavyhex(const CouplingGraph& g) {
    if (g.kind() != ArchKind::HeavyHex) throw std::invalid_argument("heavy-hex fragment on another architecture");
}

void require_group_pair(const CouplingGraph& g, int group) {
    require_heavyhex(g);
    const int groups = g.path_length() / 4;
    if (group < 0 || group + 1 >= groups)
        throw std::invalid_argument("heavy-hex unit swap: groups " + std::to_string(group) + " and " +
                                    std::to_string(group + 1) + " are not consecutive");
}

int anchor_of(const CouplingGraph& g, int group) {
    const int d = g.dangler_of_group(group);
    return g.neighbors(d).front();
}

} // namespace

std::vector<int> hh_column_path(const CouplingGraph& g, int column) {
    require_heavyhex(g);
    if (column < 0 || column >= g.path_length() / 4) throw std::out_of_range("hh_column_path: column");
    const int anchor = anchor_of(g, column);
    if (anchor != 4 * column + 3)
        throw std::invalid_argument("hh_column_path: dangler must hang from the last qubit of its group");
    return {4 * column, 4 * column + 1, 4 * column + 2, 4 * column + 3, g.dangler_of_group(column)};
}

void hh_on_path_unit_swap(Builder& b, int group, bool with_dangler) {
    const CouplingGraph& g = b.graph();
    require_group_pair(g, group);
    std::vector<int> seg(8);
    for (int i = 0; i < 8; ++i) seg[i] = 4 * group + i;
    const int anchor = anchor_of(g, group);
    const int dangler = g.dangler_of_group(group);
    const bool meet = with_dangler && b.logical_at(dangler) >= 0;
    block_crossing(b, seg, 4, [&](int pos) {
        if (meet && seg[pos] == anchor) b.cp(anchor, dangler);
    });
}

void hh_off_path_unit_swap(Builder& b, int group) {
    const CouplingGraph& g = b.graph();
    require_group_pair(g, group);
    // d_a, anchor of group, the 4 via qubits, d_b: the via group ends at d_b's anchor
    std::vector<int> path{g.dangler_of_group(group), 4 * group + 3};
    for (int i = 4; i < 8; ++i) path.push_back(4 * group + i);
    path.push_back(g.dangler_of_group(group + 1));
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw std::invalid_argument("hh_off_path_unit_swap: via path broken");
    const int last = static_cast<int>(path.size()) - 1;
    // who sits where, by role: 0 other, 1 left traveller, 2 right traveller, 3 via
    std::vector<int> role(path.size(), 0);
    role[0] = 1;
    role[last] = 2;
    for (int i = 2; i < last; ++i) role[i] = 3;
    int left = 0, right = last;
    bool right_cp_done = false;
    // the left dangler runs right one SWAP per step; the right one runs left, CPHASEing each
    // via qubit and the other dangler before passing it
    while (left != last || right != 0) {
        bool moved = false;
        // never pull away the qubit the right traveller has just CPHASEd
        const bool blocked = left + 1 == right || (right_cp_done && left + 1 == right - 1);
        if (left != last && !blocked) {
            b.swap(path[left], path[left + 1]);
            std::swap(role[left], role[left + 1]);
            ++left;
            moved = true;
        }
        if (right != 0) {
            const int nb = right - 1;
            const bool needs_cp = role[nb] == 3 || role[nb] == 1;
            if (needs_cp && !right_cp_done) {
                b.cp(path[nb], path[right]);
                right_cp_done = true;
            } else {
                b.swap(path[nb], path[right]);
                std::swap(role[nb], role[right]);
                if (left == nb) left = right;
                right = nb;
                right_cp_done = false;
            }
            moved = true;
        }
        if (!moved) throw std::logic_error("hh_off_path_unit_swap: stalled");
    }
}

std::vector<int> hh_initial_mapping(int n) {
    const CouplingGraph g = build_architecture(ArchKind::HeavyHex, n);
    std::vector<int> l2p;
    l2p.reserve(n);
    for (int c = 0; c < n / 5; ++c)
        for (int p : hh_column_path(g, c)) l2p.push_back(p);
    return l2p;
}

namespace {

// Virtual line over the path with each healthy dangler spliced in right after its anchor. The
// anchor and its dangler form a pair of positions that trade the anchor seat on demand: a SWAP
// between them is free (the contents just trade names), any other gate first seats the
// position it needs on the anchor.
class FatLine : public LineOps {
public:
    FatLine(Builder& b, const std::vector<char>& dangler_ok) : b_(b) {
        const CouplingGraph& g = b.graph();
        const int groups = g.path_length() / 4;
        for (int c = 0; c < groups; ++c) {
            for (int k = 0; k < 3; ++k) slots_.push_back({4 * c + k, -1, false});
            if (dangler_ok[c]) {
                const int pair = static_cast<int>(pairs_.size());
                pairs_.push_back({4 * c + 3, g.dangler_of_group(c), 0});
                slots_.push_back({-1, pair, false});
                slots_.push_back({-1, pair, true});
            } else {
                slots_.push_back({4 * c + 3, -1, false});
            }
        }
    }

    int size() const { return static_cast<int>(slots_.size()); }

    int phys(int v) const {
        const Slot& s = slots_[v];
        if (s.pair < 0) return s.fixed;
        const Pair& p = pairs_[s.pair];
        return s.second != static_cast<bool>(p.flipped) ? p.dangler : p.anchor;
    }

    void h(int v) override { b_.h(phys(v)); }

    void cp(int e) override {
        if (internal(e)) {
            const Pair& p = pairs_[slots_[e].pair];
            b_.cp(p.anchor, p.dangler);
            return;
        }
        seat(e);
        seat(e + 1);
        b_.cp(phys(e), phys(e + 1));
    }

    void swap(int e) override {
        if (internal(e)) {
            pairs_[slots_[e].pair].flipped ^= 1;
            return;
        }
        seat(e);
        seat(e + 1);
        b_.swap(phys(e), phys(e + 1));
    }

private:
    struct Slot {
        int fixed;
        int pair;
        bool second;
    };
    struct Pair {
        int anchor;
        int dangler;
        char flipped;
    };

    bool internal(int e) const { return slots_[e].pair >= 0 && slots_[e].pair == slots_[e + 1].pair; }

    void seat(int v) {
        const Slot& s = slots_[v];
        if (s.pair < 0) return;
        Pair& p = pairs_[s.pair];
        if (phys(v) == p.anchor) return;
        b_.swap(p.anchor, p.dangler);
        p.flipped ^= 1;
    }

    Builder& b_;
    std::vector<Slot> slots_;
    std::vector<Pair> pairs_;
};

ScheduledCircuit hh_fat_line(const CouplingGraph& g, Mode mode, const std::vector<int>& faulty) {
    const int groups = g.path_length() / 4;
    std::vector<char> ok(groups, 1);
    for (int q : faulty) ok[q - g.path_length()] = 0;
    // seat layout first: positions are fixed before any gate, so a dummy builder is enough
    std::vector<int> l2p;
    {
        std::vector<int> none;
        Builder probe(g, none);
        FatLine line(probe, ok);
        const int n = line.size();
        const std::vector<int> layout = lnn_interleaved_layout(n);
        l2p.assign(n, -1);
        for (int v = 0; v < n; ++v) l2p[layout[v]] = line.phys(v);
    }
    Builder b(g, l2p);
    FatLine line(b, ok);
    emit_lnn_pattern(line.size(), LnnPattern::Interleaved, line);
    return std::move(b).finish({ArchKind::HeavyHex, g.size_param(), faulty}, mode, true);
}

ScheduledCircuit hh_relaxed(const CouplingGraph& g, int n, bool phase_barriers) {
    Builder b(g, hh_initial_mapping(n));
    UnitSchedule s;
    s.ia = [&](int slot) { emit_lnn(b, ascending_line(b, hh_column_path(g, slot)), LnnPattern::Natural); };
    s.crossing = [&](int a, bool) {
        hh_on_path_unit_swap(b, a, true);
        // the off-path swap runs through the via group only once the on-path swap is over
        std::vector<int> phase;
        for (int i = 0; i < 8; ++i) phase.push_back(4 * a + i);
        phase.push_back(g.dangler_of_group(a));
        phase.push_back(g.dangler_of_group(a + 1));
        b.align(phase);
        hh_off_path_unit_swap(b, a);
    };
    const int columns = n / 5;
    if (phase_barriers) {
        // columns idle in a round keep going with their intra-unit work
        s.round_start = [&b, &g, columns](int r) {
            std::vector<int> busy;
            const int hi = std::min(r - 1, 2 * columns - 3 - r);
            for (int p = (r - 1) % 2; p <= hi; p += 2)
                for (int c : {p, p + 1})
                    for (int q : hh_column_path(g, c)) busy.push_back(q);
            b.align(busy);
        };
    }
    run_unit_lnn(columns, s, false);
    return std::move(b).finish({ArchKind::HeavyHex, n, {}}, Mode::Relaxed, true);
}

} // namespace

ScheduledCircuit hh_fat_line_qft(int n, Mode mode, const std::vector<int>& faulty_danglers) {
    const CouplingGraph g = build_architecture(ArchKind::HeavyHex, n);
    for (int q : faulty_danglers)
        if (!g.is_dangler(q)) throw std::invalid_argument("hh_fat_line_qft: " + std::to_string(q) + " is not a dangler");
    return hh_fat_line(g, mode, faulty_danglers);
}

ScheduledCircuit hh_qft(int n, Mode mode, bool phase_barriers) {
    const CouplingGraph g = build_architecture(ArchKind::HeavyHex, n);
    if (n < 10) throw ParameterError("n", "heavy-hex QFT needs at least two columns (n >= 10)");
    return mode == Mode::Strict ? hh_fat_line(g, mode, {}) : hh_relaxed(g, n, phase_barriers);
}

} // namespace qftatlas
