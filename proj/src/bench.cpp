#include "qftatlas/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qftatlas/generate.hpp"
#include "qftatlas/verifier.hpp"

namespace qftatlas {

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> rows{
        {ArchKind::Grid, 3, 32, 33},       {ArchKind::Grid, 4, 66, 116},      {ArchKind::Grid, 5, 113, 295},
        {ArchKind::Grid, 6, 172, 624},     {ArchKind::Sycamore, 2, 10, 6},    {ArchKind::Sycamore, 4, 81, 116},
        {ArchKind::Sycamore, 6, 208, 540}, {ArchKind::HeavyHex, 10, 42, 52},  {ArchKind::HeavyHex, 20, 172, 189},
        {ArchKind::HeavyHex, 30, 288, 444},
    };
    return rows;
}

std::optional<ReferenceRow> reference_for(ArchKind kind, int size, Mode mode) {
    if (mode != Mode::Relaxed) return std::nullopt;
    for (const ReferenceRow& r : reference_table())
        if (r.kind == kind && r.size == size) return r;
    return std::nullopt;
}

namespace {

int qubits(ArchKind kind, int size) {
    return kind == ArchKind::Grid || kind == ArchKind::Sycamore ? size * size : size;
}

BenchRow run_one(const BenchJob& job) {
    const ScheduledCircuit c = generate({job.arch, job.size, job.mode, {}, false});
    const VerificationReport rep = verify(c, graph_for(c.arch), job.mode);
    if (!rep.ok)
        throw std::runtime_error("bench: " + to_string(job.arch) + " " + std::to_string(job.size) + " " +
                                 to_string(job.mode) + " failed verification");
    const Metrics m = metrics(c);
    BenchRow row;
    row.arch = job.arch;
    row.size = job.size;
    row.mode = job.mode;
    row.depth = m.depth;
    row.swaps = m.swap_count;
    row.cphases = m.cphase_count;
    row.depth_per_qubit = static_cast<double>(m.depth) / qubits(job.arch, job.size);
    if (auto ref = reference_for(job.arch, job.size, job.mode)) {
        row.paper_depth = ref->depth;
        row.paper_swaps = ref->swaps;
        row.depth_deviation_pct = 100.0 * (m.depth - ref->depth) / ref->depth;
        row.swap_deviation_pct = 100.0 * (static_cast<double>(m.swap_count) - ref->swaps) / ref->swaps;
    }
    return row;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string size_label(ArchKind kind, int size) {
    if (kind == ArchKind::Grid || kind == ArchKind::Sycamore)
        return std::to_string(size) + "x" + std::to_string(size);
    return std::to_string(size);
}

std::string deviation(const BenchRow& r) {
    if (!r.depth_deviation_pct) return "";
    return fmt("%+.1f", *r.depth_deviation_pct) + "/" + fmt("%+.1f", *r.swap_deviation_pct);
}

} // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchJob>& jobs, int threads) {
    std::vector<BenchRow> rows(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    const int workers = std::max(1, std::min<int>(threads > 0 ? threads : std::thread::hardware_concurrency(),
                                                  static_cast<int>(jobs.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < jobs.size(); i = next++) {
                try {
                    rows[i] = run_one(jobs[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "# qftatlas bench; paper_depth/paper_swaps are published reference values (relaxed rows only);"
           " deviation% is depth/swaps\n";
    out << "arch,size,mode,depth,swaps,cphases,depth_per_qubit,paper_depth,paper_swaps,deviation%\n";
    for (const BenchRow& r : rows) {
        out << to_string(r.arch) << ',' << r.size << ',' << to_string(r.mode) << ',' << r.depth << ',' << r.swaps
            << ',' << r.cphases << ',' << fmt("%.3f", r.depth_per_qubit) << ','
            << (r.paper_depth ? std::to_string(*r.paper_depth) : "") << ','
            << (r.paper_swaps ? std::to_string(*r.paper_swaps) : "") << ',' << deviation(r) << '\n';
    }
    return out.str();
}

std::string bench_markdown(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "| arch | size | mode | depth | swaps | cphases | depth/N | ref depth | ref swaps | deviation % |\n";
    out << "|---|---|---|---:|---:|---:|---:|---:|---:|---:|\n";
    for (const BenchRow& r : rows) {
        out << "| " << to_string(r.arch) << " | " << size_label(r.arch, r.size) << " | " << to_string(r.mode)
            << " | " << r.depth << " | " << r.swaps << " | " << r.cphases << " | " << fmt("%.3f", r.depth_per_qubit)
            << " | " << (r.paper_depth ? std::to_string(*r.paper_depth) : "-") << " | "
            << (r.paper_swaps ? std::to_string(*r.paper_swaps) : "-") << " | "
            << (r.depth_deviation_pct ? deviation(r) : "-") << " |\n";
    }
    return out.str();
}

} // namespace qftatlas
