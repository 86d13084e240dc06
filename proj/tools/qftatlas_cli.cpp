// qftatlas command line: gen, verify, synth, bench, export.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qftatlas/bench.hpp"
#include "qftatlas/circuit.hpp"
#include "qftatlas/generate.hpp"
#include "qftatlas/synth.hpp"
#include "qftatlas/topology.hpp"
#include "qftatlas/verifier.hpp"

using namespace qftatlas;

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool square_kind(ArchKind k) { return k == ArchKind::Grid || k == ArchKind::Sycamore; }

// --m for grid/sycamore, --n for lnn/heavyhex
template <class T>
T pick_size(ArchKind kind, const std::optional<T>& m, const std::optional<T>& n) {
    if (square_kind(kind)) {
        if (!m || n) throw UsageError(to_string(kind) + " takes --m");
        return *m;
    }
    if (!n || m) throw UsageError(to_string(kind) + " takes --n");
    return *n;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

struct GenArgs {
    std::string arch, mode = "strict", out, format = "json";
    std::optional<int> m, n;
    std::vector<int> faulty;
    bool no_verify = false, corridor = false;
};

int cmd_gen(const GenArgs& a) {
    GenRequest req;
    req.kind = arch_kind_from_string(a.arch);
    req.size = pick_size(req.kind, a.m, a.n);
    req.mode = mode_from_string(a.mode);
    req.faulty = a.faulty;
    req.corridor = a.corridor;
    const ScheduledCircuit c = generate(req);
    emit(a.format == "qasm" ? export_qasm(c) : export_json(c), a.out);
    if (a.no_verify) return 0;
    const VerificationReport rep = verify(c, graph_for(c.arch), req.mode);
    if (rep.ok) return 0;
    const std::string report = (a.out.empty() || a.out == "-" ? std::string("qftatlas") : a.out) + ".report.json";
    write_file(report, rep.to_json());
    std::cerr << "verification failed; report: " << report << "\n";
    return kFailed;
}

int cmd_verify(const std::string& path, const std::string& mode) {
    std::optional<Mode> override;
    if (!mode.empty()) override = mode_from_string(mode);
    const VerificationReport rep = verify_file(path, override);
    std::cout << rep.to_json();
    return rep.ok ? 0 : kFailed;
}

struct SynthArgs {
    std::string shape;
    int size = 4;
    int limit = 1;
    std::vector<int> validate;
    unsigned long long cap = 100000000ULL;
    bool no_mod = false;
    int threads = 0;
};

int cmd_synth(const SynthArgs& a) {
    const SketchTemplate sk = sketch_for(a.shape, !a.no_mod);
    const SynthSpec spec = spec_for(a.shape, a.size);
    SolveOptions opts;
    opts.limit = a.limit;
    opts.cap = a.cap;
    opts.threads = a.threads;
    const auto sols = solve(sk, spec, opts);
    nlohmann::ordered_json out;
    out["shape"] = a.shape;
    out["size"] = a.size;
    out["search_space"] = search_space(sk);
    out["satisfiable"] = !sols.empty();
    out["assignments"] = nlohmann::ordered_json::array();
    for (const HoleAssignment& s : sols) {
        nlohmann::ordered_json j;
        nlohmann::ordered_json holes;
        for (std::size_t h = 0; h < sk.holes.size(); ++h) holes[sk.holes[h].name] = s.values[h];
        j["holes"] = holes;
        j["iterations"] = to_string(sk.iterations, sk, s.values);
        nlohmann::ordered_json body = nlohmann::ordered_json::array();
        for (const Statement& st : sk.body)
            body.push_back({to_string(st.lo, sk, s.values), to_string(st.hi, sk, s.values)});
        j["bounds"] = body;
        j["verdict"] = "satisfies";
        std::vector<int> tested = s.sizes_tested;
        if (!a.validate.empty()) {
            const GeneralizationReport rep = cross_validate(s, sk, a.shape, a.validate);
            nlohmann::ordered_json checks = nlohmann::ordered_json::array();
            for (const SizeCheck& c : rep.checks) {
                nlohmann::ordered_json cj{{"size", c.size}, {"ok", c.verdict.ok}};
                if (!c.verdict.ok) {
                    cj["first_failing_iteration"] = c.verdict.failing_iteration;
                    cj["reason"] = c.verdict.reason;
                }
                checks.push_back(cj);
                tested.push_back(c.size);
            }
            j["generalizing"] = rep.generalizing;
            j["cross_validation"] = checks;
        }
        j["sizes_tested"] = tested;
        out["assignments"].push_back(j);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct BenchArgs {
    std::string arch, mode = "both", csv, md;
    std::optional<std::vector<int>> m, n;
    int threads = 0;
};

int cmd_bench(const BenchArgs& a) {
    const ArchKind kind = arch_kind_from_string(a.arch);
    const std::vector<int> sizes = pick_size(kind, a.m, a.n);
    std::vector<Mode> modes;
    if (a.mode == "both")
        modes = {Mode::Relaxed, Mode::Strict};
    else
        modes = {mode_from_string(a.mode)};
    std::vector<BenchJob> jobs;
    for (int s : sizes)
        for (Mode mo : modes) jobs.push_back({kind, s, mo});
    const auto rows = run_bench(jobs, a.threads);
    if (a.csv.empty() && a.md.empty()) {
        std::cout << bench_csv(rows) << "\n" << bench_markdown(rows);
        return 0;
    }
    if (!a.csv.empty()) emit(bench_csv(rows), a.csv);
    if (!a.md.empty()) emit(bench_markdown(rows), a.md);
    return 0;
}

int cmd_export(const std::string& in, const std::string& format, const std::string& out) {
    const ScheduledCircuit c = import_json(read_file(in));
    emit(format == "json" ? export_json(c) : export_qasm(c), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qftatlas: linear-depth QFT schedules for constrained qubit topologies"};
    app.require_subcommand(1);
    const std::vector<std::string> arches{"lnn", "grid", "sycamore", "heavyhex"};
    const std::vector<std::string> modes{"strict", "relaxed"};

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a scheduled QFT circuit");
    gen->add_option("--arch", ga.arch, "architecture")->required()->check(CLI::IsMember(arches));
    gen->add_option("--m", ga.m, "grid/sycamore side length");
    gen->add_option("--n", ga.n, "lnn/heavy-hex qubit count");
    gen->add_option("--mode", ga.mode, "dependency mode")->check(CLI::IsMember(modes));
    gen->add_option("--out", ga.out, "output file (stdout if omitted)");
    gen->add_option("--faulty", ga.faulty, "faulty physical qubits, comma separated")->delimiter(',');
    gen->add_option("--format", ga.format, "json or qasm")->check(CLI::IsMember({"json", "qasm"}));
    gen->add_flag("--no-verify", ga.no_verify, "skip the verifier");
    gen->add_flag("--corridor", ga.corridor, "allow SWAP-only transit through the sycamore buffer row");

    std::string vpath, vmode;
    auto* ver = app.add_subcommand("verify", "verify a circuit JSON file");
    ver->add_option("path", vpath, "circuit file")->required();
    ver->add_option("--mode", vmode, "check under this mode instead of the file's")->check(CLI::IsMember(modes));

    SynthArgs sa;
    auto* syn = app.add_subcommand("synth", "fill sketch holes by enumeration");
    syn->add_option("--shape", sa.shape, "sketch shape")->required()->check(CLI::IsMember(synth_shapes()));
    syn->add_option("--size", sa.size, "instance size")->required();
    syn->add_option("--limit", sa.limit, "maximum assignments");
    syn->add_option("--validate", sa.validate, "sizes to cross-validate, comma separated")->delimiter(',');
    syn->add_option("--cap", sa.cap, "search space cap");
    syn->add_flag("--no-mod", sa.no_mod, "drop the mod-2 start expressions");
    syn->add_option("--threads", sa.threads, "worker threads (0: all cores)");

    BenchArgs ba;
    auto* ben = app.add_subcommand("bench", "generate, verify and tabulate a size sweep");
    ben->add_option("--arch", ba.arch, "architecture")->required()->check(CLI::IsMember(arches));
    ben->add_option("--m", ba.m, "grid/sycamore sizes, comma separated")->delimiter(',');
    ben->add_option("--n", ba.n, "lnn/heavy-hex sizes, comma separated")->delimiter(',');
    ben->add_option("--mode", ba.mode, "relaxed, strict or both")->check(CLI::IsMember({"relaxed", "strict", "both"}));
    ben->add_option("--csv", ba.csv, "CSV output file");
    ben->add_option("--md", ba.md, "markdown output file");
    ben->add_option("--threads", ba.threads, "worker threads (0: all cores)");

    std::string ein, eformat = "qasm", eout;
    auto* exp = app.add_subcommand("export", "convert a circuit JSON file");
    exp->add_option("path", ein, "circuit file")->required();
    exp->add_option("--format", eformat, "qasm or json")->check(CLI::IsMember({"json", "qasm"}));
    exp->add_option("--out", eout, "output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(ga);
        if (*ver) return cmd_verify(vpath, vmode);
        if (*syn) return cmd_synth(sa);
        if (*ben) return cmd_bench(ba);
        if (*exp) return cmd_export(ein, eformat, eout);
    } catch (const SearchSpaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) { // ParameterError, bad mode
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.field() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
