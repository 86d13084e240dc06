#include "qftatlas/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qftatlas/qft_spec.hpp"

namespace qftatlas {

namespace {

void add(FindingList& list, std::size_t cap, Finding f) {
    ++list.total;
    if (list.items.size() < cap) list.items.push_back(std::move(f));
}

std::string gate_name(const LogicalGate& g, const std::vector<int>& names) {
    if (g.kind == Gate::H) return "H(" + std::to_string(names[g.a]) + ")";
    return "CP(" + std::to_string(names[g.a]) + "," + std::to_string(names[g.b]) + ")";
}

} // namespace

VerificationReport verify(const ScheduledCircuit& c, const CouplingGraph& graph, Mode mode,
                          const VerifyOptions& opts) {
    VerificationReport rep;
    const std::size_t cap = opts.cap;
    const int nodes = graph.node_count();
    const int n = c.logical_count();

    std::vector<char> faulty(nodes, 0);
    for (int f : c.arch.faulty)
        if (f >= 0 && f < nodes) faulty[f] = 1;

    // Own replay state; nothing is borrowed from the generator.
    std::vector<int> l2p(c.initial_mapping.log_to_phys);
    std::vector<int> p2l(nodes, -1);
    for (int l = 0; l < n; ++l) {
        int p = l2p[l];
        if (p < 0 || p >= nodes) {
            add(rep.mapping_violations, cap, {-1, {l, p}, "initial mapping outside the graph"});
            l2p[l] = -1;
            continue;
        }
        if (p2l[p] != -1)
            add(rep.mapping_violations, cap, {-1, {l, p}, "initial mapping is not injective"});
        if (faulty[p]) add(rep.connectivity_violations, cap, {-1, {p}, "logical qubit on faulty qubit"});
        p2l[p] = l;
    }

    std::vector<int> expected = opts.expected_logical.value_or(std::vector<int>{});
    if (!opts.expected_logical) {
        expected.resize(n);
        for (int i = 0; i < n; ++i) expected[i] = i;
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    std::vector<int> rank(n, -1);
    for (int r = 0; r < static_cast<int>(expected.size()); ++r)
        if (expected[r] >= 0 && expected[r] < n) rank[expected[r]] = r;
    const int en = static_cast<int>(expected.size());
    GateLayers when(en);

    std::vector<int> stamp(nodes, -1);
    for (int t = 0; t < static_cast<int>(c.layers.size()); ++t) {
        const Layer& layer = c.layers[t];
        for (const PlacedOp& op : layer) {
            const int ar = op.arity();
            int ps[2] = {op.p0, op.p1};
            bool in_range = true;
            for (int i = 0; i < ar; ++i) {
                int p = ps[i];
                if (p < 0 || p >= nodes) {
                    add(rep.connectivity_violations, cap, {t, {p}, "physical index outside the graph"});
                    in_range = false;
                    continue;
                }
                if (faulty[p]) add(rep.connectivity_violations, cap, {t, {p}, "operation on faulty qubit"});
                if (stamp[p] == t) {
                    add(rep.overlap_violations, cap, {t, {p}, "qubit used twice in one layer"});
                }
                stamp[p] = t;
            }
            if (!in_range) continue;
            if (ar == 2 && !graph.has_edge(op.p0, op.p1))
                add(rep.connectivity_violations, cap, {t, {op.p0, op.p1}, "two-qubit gate on a non-link"});

            if (op.gate == Gate::H) {
                if (op.l0 < 0 || op.l0 >= n) {
                    add(rep.completeness_violations, cap, {t, {op.l0}, "H on unknown logical qubit"});
                    continue;
                }
                if (l2p[op.l0] != op.p0)
                    add(rep.mapping_violations, cap, {t, {op.l0, op.p0}, "H not at the mapped position"});
                if (rank[op.l0] < 0) {
                    add(rep.completeness_violations, cap, {t, {op.l0}, "H on unexpected logical qubit"});
                    continue;
                }
                int& slot = when.h(rank[op.l0]);
                if (slot >= 0)
                    add(rep.completeness_violations, cap, {t, {op.l0}, "duplicate H"});
                else
                    slot = t;
            } else if (op.gate == Gate::CP) {
                if (op.l0 < 0 || op.l1 < 0 || op.l0 >= n || op.l1 >= n || op.l0 == op.l1) {
                    add(rep.completeness_violations, cap, {t, {op.l0, op.l1}, "CPHASE on bad logical pair"});
                    continue;
                }
                bool direct = l2p[op.l0] == op.p0 && l2p[op.l1] == op.p1;
                bool crossed = l2p[op.l0] == op.p1 && l2p[op.l1] == op.p0;
                if (!direct && !crossed)
                    add(rep.mapping_violations, cap,
                        {t, {op.l0, op.l1}, "CPHASE not at the mapped positions"});
                if (rank[op.l0] < 0 || rank[op.l1] < 0) {
                    add(rep.completeness_violations, cap,
                        {t, {op.l0, op.l1}, "CPHASE on unexpected logical qubit"});
                    continue;
                }
                int& slot = when.cp(rank[op.l0], rank[op.l1]);
                if (slot >= 0)
                    add(rep.completeness_violations, cap, {t, {op.l0, op.l1}, "duplicate CPHASE"});
                else
                    slot = t;
            }
        }
        for (const PlacedOp& op : layer) {
            if (op.gate != Gate::SWAP) continue;
            if (op.p0 < 0 || op.p1 < 0 || op.p0 >= nodes || op.p1 >= nodes || op.p0 == op.p1) continue;
            int la = p2l[op.p0], lb = p2l[op.p1];
            p2l[op.p0] = lb;
            p2l[op.p1] = la;
            if (la >= 0) l2p[la] = op.p1;
            if (lb >= 0) l2p[lb] = op.p0;
        }
    }

    OrderCheck oc = check_order(en, mode, when, cap);
    for (const auto& g : oc.missing) {
        std::vector<int> qs = {expected[g.a]};
        if (g.kind == Gate::CP) qs.push_back(expected[g.b]);
        add(rep.completeness_violations, cap, {-1, qs, "missing " + gate_name(g, expected)});
    }
    for (const auto& v : oc.violations) {
        std::vector<int> qs = {expected[v.before.a]};
        if (v.before.kind == Gate::CP) qs.push_back(expected[v.before.b]);
        add(rep.dependency_violations, cap,
            {v.layer_after, qs,
             gate_name(v.before, expected) + " at layer " + std::to_string(v.layer_before) +
                 " must precede " + gate_name(v.after, expected) + " at layer " +
                 std::to_string(v.layer_after)});
    }
    rep.dependency_violations.total = oc.violation_count;

    rep.metrics.depth = static_cast<int>(c.layers.size());
    for (const auto& layer : c.layers)
        for (const auto& op : layer) {
            if (op.gate == Gate::H) ++rep.metrics.h_count;
            else if (op.gate == Gate::CP) ++rep.metrics.cphase_count;
            else ++rep.metrics.swap_count;
        }
    rep.metrics.final_mapping.log_to_phys = l2p;

    rep.ok = rep.connectivity_violations.empty() && rep.overlap_violations.empty() &&
             rep.mapping_violations.empty() && rep.dependency_violations.empty() &&
             rep.completeness_violations.empty();
    return rep;
}

std::string VerificationReport::to_json() const {
    using nlohmann::ordered_json;
    auto list = [](const FindingList& fl) {
        ordered_json items = ordered_json::array();
        for (const auto& f : fl.items) {
            ordered_json j;
            j["layer"] = f.layer;
            j["qubits"] = f.qubits;
            j["detail"] = f.detail;
            items.push_back(std::move(j));
        }
        ordered_json out;
        out["total"] = fl.total;
        out["items"] = std::move(items);
        return out;
    };
    ordered_json j;
    j["ok"] = ok;
    j["connectivity_violations"] = list(connectivity_violations);
    j["overlap_violations"] = list(overlap_violations);
    j["mapping_violations"] = list(mapping_violations);
    j["dependency_violations"] = list(dependency_violations);
    j["completeness_violations"] = list(completeness_violations);
    ordered_json m;
    m["depth"] = metrics.depth;
    m["swap_count"] = metrics.swap_count;
    m["cphase_count"] = metrics.cphase_count;
    m["h_count"] = metrics.h_count;
    m["final_mapping"] = metrics.final_mapping.log_to_phys;
    j["metrics"] = std::move(m);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << data;
    if (!out) throw IoError("write failed for '" + path + "'");
}

VerificationReport verify_file(const std::string& path, std::optional<Mode> mode_override) {
    ScheduledCircuit c = import_json(read_file(path));
    CouplingGraph g = graph_for(c.arch);
    return verify(c, g, mode_override.value_or(c.mode));
}

} // namespace qftatlas
