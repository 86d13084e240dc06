#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "oracle.hpp"
#include "qftatlas/grid.hpp"
#include "qftatlas/lnn.hpp"
#include "qftatlas/verifier.hpp"

using namespace qftatlas;

namespace {

VerificationReport run(const ScheduledCircuit& c, Mode mode) { return verify(c, graph_for(c.arch), mode); }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("qftatlas_test_" + name)).string();
}

} // namespace

TEST_CASE("generated LNN circuit verifies") {
    auto c = lnn_qft(5);
    auto rep = run(c, Mode::Strict);
    CHECK(rep.ok);
    CHECK(rep.metrics.cphase_count == 10);
    CHECK(oracle::check(c, Mode::Strict).valid);
}

TEST_CASE("deleting a CPHASE layer leaves a named gap") {
    auto c = lnn_qft(5);
    std::size_t victim = 0;
    while (victim < c.layers.size() &&
           std::none_of(c.layers[victim].begin(), c.layers[victim].end(),
                        [](const PlacedOp& op) { return op.gate == Gate::CP; }))
        ++victim;
    REQUIRE(victim < c.layers.size());
    PlacedOp lost{};
    for (const auto& op : c.layers[victim])
        if (op.gate == Gate::CP) lost = op;
    c.layers.erase(c.layers.begin() + static_cast<long>(victim));
    auto rep = run(c, Mode::Strict);
    CHECK_FALSE(rep.ok);
    bool named = false;
    for (const auto& f : rep.completeness_violations.items)
        named |= f.qubits == std::vector<int>{lost.l0, lost.l1};
    CHECK(named);
}

TEST_CASE("H moved to the front breaks the order") {
    auto c = lnn_qft(3);
    std::size_t at = c.layers.size();
    for (std::size_t t = 0; t < c.layers.size(); ++t)
        for (const auto& op : c.layers[t])
            if (op.gate == Gate::H && op.l0 == 1) at = t;
    REQUIRE(at < c.layers.size());
    // rebuild the op at logical 1's starting position so the mapping stays consistent
    auto& from = c.layers[at];
    from.erase(std::find_if(from.begin(), from.end(),
                            [](const PlacedOp& op) { return op.gate == Gate::H && op.l0 == 1; }));
    if (from.empty()) c.layers.erase(c.layers.begin() + static_cast<long>(at));
    c.layers.insert(c.layers.begin(), Layer{PlacedOp::h(1, c.initial_mapping.log_to_phys[1])});
    auto rep = run(c, Mode::Relaxed);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& f : rep.dependency_violations.items) found |= f.detail.find("H(1)") != std::string::npos;
    CHECK(found);
    CHECK_FALSE(oracle::check(c, Mode::Relaxed).valid);
}

TEST_CASE("grid relaxed output passes relaxed and fails strict") {
    auto c = grid_qft(4, Mode::Relaxed);
    auto path = temp_path("grid4.json");
    write_file(path, export_json(c));
    CHECK(verify_file(path).ok);
    auto strict = verify_file(path, Mode::Strict);
    CHECK_FALSE(strict.ok);
    CHECK_FALSE(strict.dependency_violations.empty());
    CHECK_FALSE(oracle::check(c, Mode::Strict).valid);
    std::remove(path.c_str());
}

TEST_CASE("missing file is an IO error") {
    CHECK_THROWS_AS(verify_file(temp_path("does_not_exist.json")), IoError);
}

TEST_CASE("report JSON carries the verdict") {
    auto rep = run(lnn_qft(4), Mode::Strict);
    auto text = rep.to_json();
    CHECK(text.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("finding lists are capped but totals are not") {
    auto c = lnn_qft(30);
    c.layers.clear();
    VerifyOptions opts;
    opts.cap = 5;
    auto rep = verify(c, graph_for(c.arch), Mode::Strict, opts);
    CHECK(rep.completeness_violations.items.size() == 5);
    CHECK(rep.completeness_violations.total == 30 + 435);
}
