#include "qftatlas/sycamore.hpp"

#include <algorithm>
#include <stdexcept>

#include "qftatlas/lnn.hpp"
#include "qftatlas/unit_driver.hpp"

namespace qftatlas {

std::vector<int> syc_unit_line(const CouplingGraph& g, int slot) {
    const int m = g.size_param();
    std::vector<int> line(2 * m);
    for (int p = 0; p < 2 * m; ++p) line[p] = g.index(2 * slot + p % 2, p / 2);
    return line;
}

namespace {

void check_slot(const CouplingGraph& g, int slot) {
    if (g.kind() != ArchKind::Sycamore) throw std::invalid_argument("sycamore: wrong architecture");
    if (slot < 0 || 2 * slot + 3 >= g.size_param())
        throw std::invalid_argument("sycamore: units are not adjacent");
}

// The boundary link among line positions {a, a+1} of the two units.
std::pair<int, int> link_at(const Builder& b, const std::vector<int>& up, const std::vector<int>& lo,
                            int a) {
    if (b.graph().has_edge(up[a], lo[a + 1])) return {up[a], lo[a + 1]};
    if (b.graph().has_edge(up[a + 1], lo[a])) return {up[a + 1], lo[a]};
    throw std::logic_error("sycamore: no boundary link at position " + std::to_string(a));
}

void sync_swap(Builder& b, const std::vector<int>& up, const std::vector<int>& lo, int a) {
    b.swap(up[a], up[a + 1]);
    b.swap(lo[a], lo[a + 1]);
}

void crossing_round(Builder& b, const std::vector<int>& up, const std::vector<int>& lo, int a) {
    auto [u0, l0] = link_at(b, up, lo, a);
    b.cp(u0, l0);
    sync_swap(b, up, lo, a);
    auto [u1, l1] = link_at(b, up, lo, a);
    b.cp(u1, l1);
}

void detour(Builder& b, int slot, SycDetour kind) {
    const CouplingGraph& g = b.graph();
    const int m = g.size_param();
    const auto up = syc_unit_line(g, slot), lo = syc_unit_line(g, slot + 1);
    const int len = 2 * m;
    switch (kind) {
    case SycDetour::None: return;
    case SycDetour::Horizontal:
        for (int p = 1; p < len; p += 2) {
            b.swap(lo[p - 1], lo[p]);
            b.cp(up[p], lo[p - 1]);
            b.swap(lo[p - 1], lo[p]);
        }
        for (int p = 0; p + 1 < len; p += 2) {
            b.swap(up[p], up[p + 1]);
            b.cp(up[p + 1], lo[p]);
            b.swap(up[p], up[p + 1]);
        }
        return;
    case SycDetour::Vertical: {
        const int r0 = 2 * slot;
        for (int c = 0; c < m; ++c) {
            b.swap(g.index(r0 + 1, c), g.index(r0 + 2, c));
            b.cp(g.index(r0, c), g.index(r0 + 1, c));
            b.cp(g.index(r0 + 2, c), g.index(r0 + 3, c));
            b.swap(g.index(r0 + 1, c), g.index(r0 + 2, c));
        }
        return;
    }
    }
}

void relaxed_ie(Builder& b, int slot, SycDetour kind) {
    const CouplingGraph& g = b.graph();
    detour(b, slot, kind);
    const auto up = syc_unit_line(g, slot), lo = syc_unit_line(g, slot + 1);
    const int len = static_cast<int>(up.size());
    for (int i = 0; i < len; ++i)
        for (int a = i % 2; a + 1 < len; a += 2) crossing_round(b, up, lo, a);
}

void strict_ie(Builder& b, int slot) {
    const CouplingGraph& g = b.graph();
    auto up = syc_unit_line(g, slot), lo = syc_unit_line(g, slot + 1);
    const int len = static_cast<int>(up.size());
    auto ascending = [&](const std::vector<int>& line) {
        return b.logical_at(line.front()) < b.logical_at(line.back());
    };
    if (ascending(up) != ascending(lo))
        throw std::logic_error("sycamore strict IE: units disagree on orientation");
    if (!ascending(up)) {
        std::reverse(up.begin(), up.end());
        std::reverse(lo.begin(), lo.end());
    }
    // same-position pair at the top: one in-unit swap makes it adjacent
    auto top_pair = [&] {
        if (g.has_edge(up[1], lo[0])) {
            b.swap(up[0], up[1]);
            b.cp(up[1], lo[0]);
            b.swap(up[0], up[1]);
        } else {
            b.swap(lo[0], lo[1]);
            b.cp(up[0], lo[1]);
            b.swap(lo[0], lo[1]);
        }
    };
    top_pair();
    const int rounds = 2 * len - 3;
    for (int r = 1; r <= rounds; ++r) {
        const int hi = std::min(r - 1, 2 * len - 3 - r);
        for (int a = (r - 1) % 2; a <= hi; a += 2) crossing_round(b, up, lo, a);
        if ((r - 1) % 2 == 0) top_pair();
    }
}

} // namespace

void syc_unit_swap(Builder& b, int slot, bool same_position) {
    const CouplingGraph& g = b.graph();
    check_slot(g, slot);
    const int m = g.size_param();
    const int r0 = 2 * slot;
    for (int c = 0; c < m; ++c) b.swap(g.index(r0 + 1, c), g.index(r0 + 2, c));
    if (same_position) {
        for (int c = 0; c < m; ++c) {
            b.cp(g.index(r0, c), g.index(r0 + 1, c));
            b.cp(g.index(r0 + 2, c), g.index(r0 + 3, c));
        }
    }
    for (int c = 0; c < m; ++c) {
        b.swap(g.index(r0, c), g.index(r0 + 1, c));
        b.swap(g.index(r0 + 2, c), g.index(r0 + 3, c));
    }
    for (int c = 0; c < m; ++c) b.swap(g.index(r0 + 1, c), g.index(r0 + 2, c));
}

void syc_ie(Builder& b, const SycIeOptions& opts) {
    check_slot(b.graph(), opts.slot);
    if (opts.mode == Mode::Relaxed)
        relaxed_ie(b, opts.slot, opts.detour);
    else
        strict_ie(b, opts.slot);
}

std::vector<int> syc_initial_mapping(int m, int first_unit, int units) {
    CouplingGraph g = build_architecture(ArchKind::Sycamore, m);
    if (units < 0) units = m / 2 - first_unit;
    if (first_unit < 0 || units < 1 || first_unit + units > m / 2)
        throw std::invalid_argument("syc_initial_mapping: unit span out of range");
    const int len = 2 * m;
    std::vector<int> l2p(units * len);
    if (units == 1) {
        auto line = syc_unit_line(g, first_unit);
        auto layout = lnn_interleaved_layout(len);
        for (int p = 0; p < len; ++p) l2p[layout[p]] = line[p];
        return l2p;
    }
    for (int u = 0; u < units; ++u) {
        auto line = syc_unit_line(g, first_unit + u);
        for (int i = 0; i < len; ++i) l2p[u * len + i] = line[u % 2 == 0 ? i : len - 1 - i];
    }
    return l2p;
}

ScheduledCircuit syc_qft_span(int m, Mode mode, int first_unit, int units, ArchDescriptor arch) {
    CouplingGraph g = build_architecture(ArchKind::Sycamore, m);
    Builder b(g, syc_initial_mapping(m, first_unit, units));
    if (units == 1) {
        emit_lnn(b, syc_unit_line(g, first_unit), LnnPattern::Interleaved);
        return std::move(b).finish(std::move(arch), mode);
    }
    UnitSchedule s;
    s.ia = [&](int slot) {
        emit_lnn(b, ascending_line(b, syc_unit_line(g, first_unit + slot)), LnnPattern::Natural);
    };
    s.crossing = [&](int a, bool exchange) {
        const int slot = first_unit + a;
        if (mode == Mode::Strict) {
            syc_ie(b, {slot, mode, SycDetour::None});
            if (exchange) syc_unit_swap(b, slot);
            return;
        }
        // same-position pairs ride along the unit swap when there is one
        syc_ie(b, {slot, mode, exchange ? SycDetour::None : SycDetour::Vertical});
        if (exchange) syc_unit_swap(b, slot, true);
    };
    run_unit_lnn(units, s, true);
    return std::move(b).finish(std::move(arch), mode, true);
}

ScheduledCircuit syc_qft(int m, Mode mode) {
    build_architecture(ArchKind::Sycamore, m);
    return syc_qft_span(m, mode, 0, m / 2, {ArchKind::Sycamore, m, {}});
}

} // namespace qftatlas
