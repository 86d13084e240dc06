#include <doctest.h>

#include "oracle.hpp"
#include "qftatlas/lnn.hpp"
#include "qftatlas/verifier.hpp"

using namespace qftatlas;

TEST_CASE("tiny lines") {
    auto c1 = lnn_qft(1);
    CHECK(c1.layers.size() == 1);
    CHECK(metrics(c1).swap_count == 0);

    auto c4 = metrics(lnn_qft(4));
    CHECK(c4.depth == 10);
    CHECK(c4.swap_count == 6);
}

TEST_CASE("every line up to 40 is valid with C(n,2) swaps and a reversed mapping") {
    for (int n = 1; n <= 40; ++n)
        for (Mode mode : {Mode::Strict, Mode::Relaxed}) {
            CAPTURE(n);
            auto c = lnn_qft(n, mode);
            auto r = oracle::check(c, mode);
            CHECK_MESSAGE(r.valid, r.why);
            CHECK(r.swaps == n * (n - 1) / 2);
            // reversed: logical l ends where logical n-1-l started
            for (int l = 0; l < n; ++l)
                CHECK(r.final_l2p[l] == c.initial_mapping.log_to_phys[n - 1 - l]);
            CHECK(verify(c, graph_for(c.arch), mode).ok);
        }
}

TEST_CASE("depth follows 4n-6 from n=4") {
    CHECK(metrics(lnn_qft(2)).depth == 4);
    CHECK(metrics(lnn_qft(3)).depth == 8);
    for (int n = 4; n <= 30; ++n) CHECK(metrics(lnn_qft(n)).depth == 4 * n - 6);
}

TEST_CASE("natural pattern is also valid") {
    for (int n = 2; n <= 12; ++n) {
        LnnOptions o;
        o.n = n;
        o.pattern = LnnPattern::Natural;
        auto c = lnn_qft(o);
        CHECK(oracle::check(c, Mode::Strict).valid);
        CHECK(metrics(c).depth == 4 * n - 4);
    }
}

TEST_CASE("offset segment leaves the rest of the line alone") {
    LnnOptions o;
    o.n = 6;
    o.physical_offset = 3;
    auto c = lnn_qft(o);
    CHECK(c.arch.size == 9);
    for (const auto& layer : c.layers)
        for (const auto& op : layer) {
            CHECK(op.p0 >= 3);
            if (op.gate != Gate::H) CHECK(op.p1 >= 3);
        }
    CHECK(oracle::check(c, Mode::Strict).valid);
}

TEST_CASE("interleaved layout is a permutation") {
    for (int n = 1; n <= 20; ++n) {
        auto lay = lnn_interleaved_layout(n);
        std::vector<int> sorted = lay;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) CHECK(sorted[i] == i);
    }
}
