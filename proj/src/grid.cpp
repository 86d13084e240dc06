#include "qftatlas/grid.hpp"

#include <algorithm>
#include <stdexcept>

#include "qftatlas/crossing.hpp"
#include "qftatlas/lnn.hpp"
#include "qftatlas/unit_driver.hpp"

namespace qftatlas {

std::vector<int> grid_row(const CouplingGraph& g, int row) {
    const int m = g.size_param();
    std::vector<int> out(m);
    for (int c = 0; c < m; ++c) out[c] = g.index(row, c);
    return out;
}

void grid_unit_swap(Builder& b, const std::vector<int>& top, const std::vector<int>& bottom) {
    if (top.size() != bottom.size()) throw std::invalid_argument("grid_unit_swap: length mismatch");
    for (std::size_t c = 0; c < top.size(); ++c)
        if (!b.graph().has_edge(top[c], bottom[c]))
            throw std::invalid_argument("grid_unit_swap: rows are not adjacent");
    for (std::size_t c = 0; c < top.size(); ++c) b.swap(top[c], bottom[c]);
}

void grid_unit_swap(Builder& b, int u, int v) {
    grid_unit_swap(b, grid_row(b.graph(), u), grid_row(b.graph(), v));
}

namespace {

void relaxed_ie(Builder& b, const std::vector<int>& top, const std::vector<int>& bottom) {
    const int m = static_cast<int>(top.size());
    for (int i = 0; i < m; ++i) {
        for (int c = 0; c < m; ++c) b.cp(top[c], bottom[c]);
        for (int c = i % 2; c + 1 < m; c += 2) b.swap(top[c], top[c + 1]);
        for (int c = (i + 1) % 2; c + 1 < m; c += 2) b.swap(bottom[c], bottom[c + 1]);
    }
}

void strict_crossing(Builder& b, const std::vector<int>& top, const std::vector<int>& bottom) {
    const int m = static_cast<int>(top.size());
    auto smallest_left = [&](const std::vector<int>& row) {
        return m == 1 || b.logical_at(row.front()) < b.logical_at(row.back());
    };
    const bool left = smallest_left(top);
    if (left != smallest_left(bottom))
        throw std::logic_error("grid strict crossing: rows disagree on orientation");
    // path: top row from the far end to the U-turn column, then bottom row outwards
    std::vector<int> path;
    path.reserve(2 * m);
    for (int i = 0; i < m; ++i) path.push_back(top[left ? m - 1 - i : i]);
    for (int i = 0; i < m; ++i) path.push_back(bottom[left ? i : m - 1 - i]);
    block_crossing(b, path, m);
}

} // namespace

void grid_ie(Builder& b, const std::vector<int>& top, const std::vector<int>& bottom, Mode mode) {
    if (top.size() != bottom.size() || top.empty())
        throw std::invalid_argument("grid_ie: unit mismatch");
    for (std::size_t c = 0; c < top.size(); ++c)
        if (!b.graph().has_edge(top[c], bottom[c]))
            throw std::invalid_argument("grid_ie: rows are not adjacent");
    if (mode == Mode::Relaxed)
        relaxed_ie(b, top, bottom);
    else
        strict_crossing(b, top, bottom);
}

std::vector<int> grid_initial_mapping(int m) {
    std::vector<int> l2p(m * m);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i) l2p[r * m + i] = r * m + (r % 2 == 0 ? i : m - 1 - i);
    return l2p;
}

ScheduledCircuit grid_qft(int m, Mode mode) {
    CouplingGraph g = build_architecture(ArchKind::Grid, m);
    Builder b(g, grid_initial_mapping(m));
    UnitSchedule s;
    s.ia = [&](int slot) { emit_lnn(b, ascending_line(b, grid_row(g, slot)), LnnPattern::Natural); };
    s.crossing = [&](int a, bool exchange) {
        const auto top = grid_row(g, a), bottom = grid_row(g, a + 1);
        grid_ie(b, top, bottom, mode);
        if (mode == Mode::Relaxed && exchange) grid_unit_swap(b, top, bottom);
    };
    run_unit_lnn(m, s, mode == Mode::Relaxed);
    return std::move(b).finish({ArchKind::Grid, m, {}}, mode);
}

} // namespace qftatlas
