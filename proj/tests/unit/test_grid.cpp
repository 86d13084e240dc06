#include <doctest.h>

#include "oracle.hpp"
#include "qftatlas/grid.hpp"
#include "qftatlas/verifier.hpp"

using namespace qftatlas;

namespace {

std::vector<int> identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

TEST_CASE("row swap is one layer and an involution") {
    auto g = build_architecture(ArchKind::Grid, 4);
    Builder b(g, identity(16));
    grid_unit_swap(b, 0, 1);
    CHECK(b.depth() == 1);
    for (int c = 0; c < 4; ++c) CHECK(b.logical_at(c) == 4 + c);
    grid_unit_swap(b, 0, 1);
    for (int q = 0; q < 16; ++q) CHECK(b.logical_at(q) == q);
    auto circ = std::move(b).finish({ArchKind::Grid, 4, {}}, Mode::Relaxed);
    CHECK(metrics(circ).swap_count == 8);
}

TEST_CASE("row swap needs adjacent rows") {
    auto g = build_architecture(ArchKind::Grid, 3);
    Builder b(g, identity(9));
    CHECK_THROWS(grid_unit_swap(b, 0, 2));
}

TEST_CASE("inter-row block meets every cross pair once") {
    for (Mode mode : {Mode::Relaxed, Mode::Strict})
        for (int m = 2; m <= 7; ++m) {
            CAPTURE(m);
            auto g = build_architecture(ArchKind::Grid, m);
            // strict wants both rows ranked the same way round
            Builder b(g, mode == Mode::Strict ? identity(m * m) : grid_initial_mapping(m));
            grid_ie(b, grid_row(g, 0), grid_row(g, 1), mode);
            auto circ = std::move(b).finish({ArchKind::Grid, m, {}}, mode);
            std::set<std::pair<int, int>> met;
            // last partner seen by each qubit, for the strict order check
            std::vector<int> last(2 * m, -1);
            for (const auto& layer : circ.layers)
                for (const auto& op : layer)
                    if (op.gate == Gate::CP) {
                        CHECK(met.insert({op.l0, op.l1}).second);
                        CHECK((op.l0 < m) != (op.l1 < m));
                        if (mode == Mode::Strict) {
                            CHECK(last[op.l0] < op.l1);
                            CHECK(last[op.l1] < op.l0);
                        }
                        last[op.l0] = op.l1;
                        last[op.l1] = op.l0;
                    }
            CHECK(met.size() == static_cast<std::size_t>(m * m));
            if (mode == Mode::Relaxed) CHECK(circ.layers.size() <= static_cast<std::size_t>(2 * m + 1));
        }
}

TEST_CASE("grid depth and swaps against the published small sizes") {
    struct Row { int m, depth, swaps; };
    for (Row r : {Row{3, 32, 33}, Row{6, 172, 624}}) {
        auto mt = metrics(grid_qft(r.m, Mode::Relaxed));
        CHECK(std::abs(mt.depth - r.depth) <= 0.15 * r.depth);
        CHECK(std::abs(mt.swap_count - r.swaps) <= 0.20 * r.swaps);
    }
}

TEST_CASE("grid circuits are valid") {
    for (int m = 2; m <= 9; ++m)
        for (Mode mode : {Mode::Strict, Mode::Relaxed}) {
            CAPTURE(m);
            auto c = grid_qft(m, mode);
            auto r = oracle::check(c, mode);
            CHECK_MESSAGE(r.valid, r.why);
            CHECK(r.cphases == m * m * (m * m - 1) / 2);
            CHECK(r.hs == m * m);
            CHECK(verify(c, graph_for(c.arch), mode).ok);
        }
}
