#include <doctest.h>

#include "qftatlas/circuit.hpp"
#include "qftatlas/grid.hpp"
#include "qftatlas/lnn.hpp"

using namespace qftatlas;

namespace {

ScheduledCircuit empty_lnn(int n) {
    ScheduledCircuit c;
    c.arch = {ArchKind::LNN, n, {}};
    for (int i = 0; i < n; ++i) c.initial_mapping.log_to_phys.push_back(i);
    return c;
}

int count(const std::string& text, const std::string& needle) {
    int k = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++k;
    return k;
}

} // namespace

TEST_CASE("append_layer checks disjointness and links") {
    auto c = empty_lnn(4);
    auto g = graph_for(c.arch);
    append_layer(c, g, {PlacedOp::swap(0, 1), PlacedOp::swap(2, 3)});
    CHECK(metrics(c).depth == 1);
    CHECK_THROWS_AS(append_layer(c, g, {PlacedOp::swap(0, 1), PlacedOp::swap(1, 2)}), CircuitError);
    // after the first layer logical 1 sits on 0 and logical 3 on 2
    CHECK_THROWS_AS(append_layer(c, g, {PlacedOp::cp(1, 3, 0, 2)}), CircuitError);
    CHECK(metrics(c).depth == 1);
}

TEST_CASE("append_layer checks the mapping") {
    auto c = empty_lnn(3);
    auto g = graph_for(c.arch);
    CHECK_THROWS_AS(append_layer(c, g, {PlacedOp::h(0, 1)}), CircuitError);
    append_layer(c, g, {PlacedOp::h(0, 0)});
    CHECK(metrics(c).h_count == 1);
}

TEST_CASE("metrics") {
    auto m0 = metrics(empty_lnn(3));
    CHECK(m0.depth == 0);
    CHECK(m0.swap_count == 0);
    CHECK(m0.cphase_count == 0);
    CHECK(m0.h_count == 0);

    auto l4 = metrics(lnn_qft(4));
    CHECK(l4.swap_count == 6);
    CHECK(l4.depth == 10);

    auto g3 = metrics(grid_qft(3, Mode::Relaxed));
    CHECK(g3.cphase_count == 36);
    CHECK(g3.h_count == 9);
}

TEST_CASE("CPHASE angle exponent is the logical distance") {
    auto op = PlacedOp::cp(5, 2, 7, 9);
    CHECK(op.l0 == 2);
    CHECK(op.l1 == 5);
    CHECK(op.p0 == 9);
    CHECK(op.p1 == 7);
    CHECK(op.k == 3);
}

TEST_CASE("JSON round trip") {
    for (const auto& c : {lnn_qft(5), lnn_qft(1), grid_qft(4, Mode::Strict), grid_qft(3, Mode::Relaxed)}) {
        auto text = export_json(c);
        auto back = import_json(text);
        CHECK(back == c);
        CHECK(export_json(back) == text);
    }
    CHECK(export_json(lnn_qft(7)) == export_json(lnn_qft(7)));
}

TEST_CASE("JSON schema errors name the field") {
    auto text = export_json(lnn_qft(3));
    auto pos = text.find("\"layers\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "\"layerz\"");
    try {
        import_json(text);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.field() == "layers");
    }
    CHECK_THROWS_AS(import_json("not json"), SchemaError);
}

TEST_CASE("QASM export") {
    auto c = empty_lnn(1);
    append_layer(c, graph_for(c.arch), {PlacedOp::h(0, 0)});
    auto q = export_qasm(c);
    CHECK(count(q, "\nh ") == 1);
    CHECK(count(q, "barrier") == 1);

    auto two = empty_lnn(2);
    append_layer(two, graph_for(two.arch), {PlacedOp::cp(0, 1, 0, 1)});
    CHECK(export_qasm(two).find("cp(pi/2) q[0],q[1];") != std::string::npos);

    CHECK(count(export_qasm(lnn_qft(4)), "\nswap ") == 6);
}
