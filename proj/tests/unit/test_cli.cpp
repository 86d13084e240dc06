#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <sys/wait.h>

#ifndef QFTATLAS_CLI
#error "QFTATLAS_CLI must point at the built CLI"
#endif

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
    auto d = fs::temp_directory_path() / "qftatlas_cli_test";
    fs::create_directories(d);
    return d;
}

std::string path_of(const std::string& name) { return (scratch_dir() / name).string(); }

int run(const std::string& args) {
    std::string cmd = std::string(QFTATLAS_CLI) + " " + args + " > " + path_of("stdout.txt") + " 2> " +
                      path_of("stderr.txt");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("gen exit codes") {
    CHECK(run("gen --arch grid --m 6 --mode relaxed --out " + path_of("g6.json")) == 0);
    CHECK(run("gen --arch sycamore --m 5 --out " + path_of("s5.json")) == 2);
    CHECK(run("gen --arch lnn --n 1 --out " + path_of("l1.json")) == 0);
    auto doc = nlohmann::json::parse(slurp(path_of("l1.json")));
    CHECK(doc["layers"].size() == 1);
    CHECK(run("gen --arch heavyhex --n 20 --faulty 5") == 2);
    CHECK(run("gen --arch grid") == 2);
    CHECK(run("frobnicate") == 2);
}

TEST_CASE("gen is byte-deterministic") {
    REQUIRE(run("gen --arch heavyhex --n 30 --mode relaxed --out " + path_of("a.json")) == 0);
    REQUIRE(run("gen --arch heavyhex --n 30 --mode relaxed --out " + path_of("b.json")) == 0);
    CHECK(slurp(path_of("a.json")) == slurp(path_of("b.json")));
}

TEST_CASE("verify exit codes") {
    REQUIRE(run("gen --arch grid --m 4 --mode relaxed --out " + path_of("g4.json")) == 0);
    CHECK(run("verify " + path_of("g4.json")) == 0);
    CHECK(run("verify --mode strict " + path_of("g4.json")) == 1);
    auto report = nlohmann::json::parse(slurp(path_of("stdout.txt")));
    CHECK(report["ok"] == false);
    CHECK_FALSE(report["dependency_violations"].empty());

    // move one SWAP onto a different link; positions of later gates follow from the replay, so
    // the damage shows up as gates on non-links or at the wrong place
    auto doc = nlohmann::json::parse(slurp(path_of("g4.json")));
    bool done = false;
    for (auto& layer : doc["layers"]) {
        for (auto& op : layer)
            if (op["g"] == "swap" && op["p"][0].get<int>() + 1 == op["p"][1].get<int>() &&
                op["p"][1].get<int>() % 4 != 3) {
                std::set<int> used;
                for (auto& o : layer)
                    if (o.contains("p"))
                        for (auto& x : o["p"]) used.insert(x.get<int>());
                int a = op["p"][1].get<int>(), b = a + 1;
                if (used.count(b)) continue;
                op["p"] = {a, b};
                done = true;
                break;
            }
        if (done) break;
    }
    REQUIRE(done);
    std::ofstream(path_of("tampered.json")) << doc.dump();
    CHECK(run("verify " + path_of("tampered.json")) == 1);

    CHECK(run("verify " + path_of("missing.json")) == 2);
    std::ofstream(path_of("broken.json")) << "{\"version\":1}";
    CHECK(run("verify " + path_of("broken.json")) == 2);
}

TEST_CASE("export and synth") {
    REQUIRE(run("gen --arch lnn --n 4 --out " + path_of("l4.json")) == 0);
    CHECK(run("export " + path_of("l4.json") + " --format qasm --out " + path_of("l4.qasm")) == 0);
    CHECK(slurp(path_of("l4.qasm")).rfind("OPENQASM 2.0;", 0) == 0);
    CHECK(run("synth --shape lnn --size 4 --limit 1") == 0);
    auto out = nlohmann::json::parse(slurp(path_of("stdout.txt")));
    CHECK_FALSE(out.empty());
    CHECK(run("synth --shape lnn --size 4 --cap 5") == 2);
}

TEST_CASE("bench writes CSV") {
    CHECK(run("bench --arch grid --m 3,4 --mode relaxed --csv " + path_of("b.csv")) == 0);
    auto csv = slurp(path_of("b.csv"));
    CHECK(csv.find("grid,3,relaxed,") != std::string::npos);
    CHECK(csv.find("grid,4,relaxed,") != std::string::npos);
}
