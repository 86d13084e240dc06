#include "qftatlas/circuit.hpp"

#include <algorithm>
#include <charconv>

#include <json.hpp>

namespace qftatlas {

std::string to_string(Mode mode) { return mode == Mode::Strict ? "strict" : "relaxed"; }

Mode mode_from_string(const std::string& s) {
    if (s == "strict") return Mode::Strict;
    if (s == "relaxed") return Mode::Relaxed;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

PlacedOp PlacedOp::cp(int la, int lb, int pa, int pb) {
    if (la > lb) {
        std::swap(la, lb);
        std::swap(pa, pb);
    }
    return {Gate::CP, la, lb, pa, pb, lb - la};
}

CouplingGraph graph_for(const ArchDescriptor& arch) { return build_architecture(arch.kind, arch.size); }

namespace {

struct Replay {
    std::vector<int> l2p;
    std::vector<int> p2l;

    Replay(const Mapping& m, int nodes) : l2p(m.log_to_phys), p2l(nodes, -1) {
        for (int l = 0; l < static_cast<int>(l2p.size()); ++l) {
            int p = l2p[l];
            if (p < 0 || p >= nodes || p2l[p] != -1)
                throw CircuitError("initial mapping is not injective into the graph");
            p2l[p] = l;
        }
    }

    void swap(int a, int b) {
        int la = p2l[a], lb = p2l[b];
        p2l[a] = lb;
        p2l[b] = la;
        if (la >= 0) l2p[la] = b;
        if (lb >= 0) l2p[lb] = a;
    }
};

} // namespace

void append_layer(ScheduledCircuit& circuit, const CouplingGraph& graph, Layer layer) {
    Replay r(circuit.initial_mapping, graph.node_count());
    for (const auto& l : circuit.layers)
        for (const auto& op : l)
            if (op.gate == Gate::SWAP) r.swap(op.p0, op.p1);

    std::vector<char> used(graph.node_count(), 0);
    auto touch = [&](int p) {
        if (p < 0 || p >= graph.node_count()) throw CircuitError("physical index out of range");
        if (used[p]) throw CircuitError("overlap in layer at physical " + std::to_string(p));
        used[p] = 1;
    };
    for (const auto& op : layer) {
        touch(op.p0);
        if (op.arity() == 2) {
            touch(op.p1);
            if (!graph.has_edge(op.p0, op.p1))
                throw CircuitError("no link between " + std::to_string(op.p0) + " and " +
                                   std::to_string(op.p1));
        }
        if (op.gate == Gate::H && r.l2p.at(op.l0) != op.p0)
            throw CircuitError("H physical argument disagrees with mapping");
        if (op.gate == Gate::CP && (r.l2p.at(op.l0) != op.p0 || r.l2p.at(op.l1) != op.p1))
            throw CircuitError("CPHASE physical arguments disagree with mapping");
    }
    circuit.layers.push_back(std::move(layer));
}

Mapping final_mapping(const ScheduledCircuit& circuit, int node_count) {
    Replay r(circuit.initial_mapping, node_count);
    for (const auto& l : circuit.layers)
        for (const auto& op : l)
            if (op.gate == Gate::SWAP) r.swap(op.p0, op.p1);
    return Mapping{r.l2p};
}

Metrics metrics(const ScheduledCircuit& circuit) {
    Metrics m;
    m.depth = static_cast<int>(circuit.layers.size());
    int nodes = 0;
    for (int p : circuit.initial_mapping.log_to_phys) nodes = std::max(nodes, p + 1);
    for (const auto& l : circuit.layers) {
        for (const auto& op : l) {
            switch (op.gate) {
            case Gate::H: ++m.h_count; break;
            case Gate::CP: ++m.cphase_count; break;
            case Gate::SWAP:
                ++m.swap_count;
                nodes = std::max({nodes, op.p0 + 1, op.p1 + 1});
                break;
            }
        }
    }
    m.final_mapping = final_mapping(circuit, nodes);
    return m;
}

namespace {

void put_int(std::string& out, long long v) {
    char buf[24];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

void put_int_array(std::string& out, const std::vector<int>& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        put_int(out, v[i]);
    }
    out += ']';
}

} // namespace

std::string export_json(const ScheduledCircuit& c) {
    std::string out;
    out.reserve(64 + c.layers.size() * 64);
    out += "{\"version\":1,\"architecture\":{\"kind\":\"";
    out += to_string(c.arch.kind);
    out += "\",\"size\":";
    put_int(out, c.arch.size);
    out += ",\"faulty\":";
    put_int_array(out, c.arch.faulty);
    out += "},\"mode\":\"";
    out += to_string(c.mode);
    out += "\",\"initial_mapping\":";
    put_int_array(out, c.initial_mapping.log_to_phys);
    out += ",\"layers\":[";
    for (std::size_t t = 0; t < c.layers.size(); ++t) {
        out += t ? ",\n[" : "\n[";
        const auto& layer = c.layers[t];
        for (std::size_t i = 0; i < layer.size(); ++i) {
            const auto& op = layer[i];
            if (i) out += ',';
            switch (op.gate) {
            case Gate::H:
                out += "{\"g\":\"h\",\"q\":[";
                put_int(out, op.l0);
                out += "]}";
                break;
            case Gate::CP:
                out += "{\"g\":\"cp\",\"q\":[";
                put_int(out, op.l0);
                out += ',';
                put_int(out, op.l1);
                out += "],\"k\":";
                put_int(out, op.k);
                out += '}';
                break;
            case Gate::SWAP:
                out += "{\"g\":\"swap\",\"p\":[";
                put_int(out, op.p0);
                out += ',';
                put_int(out, op.p1);
                out += "]}";
                break;
            }
        }
        out += ']';
    }
    out += c.layers.empty() ? "]}\n" : "\n]}\n";
    return out;
}

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "schema: '" + path + "' must be an object");
    auto it = obj.find(key);
    if (it == obj.end()) {
        std::string field = path.empty() ? key : path + "." + key;
        throw SchemaError(field, "schema: missing field '" + field + "'");
    }
    return *it;
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path, "schema: '" + path + "' must be an integer");
    return v.get<int>();
}

std::vector<int> as_int_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "schema: '" + path + "' must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_int(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "schema: '" + path + "' must be a string");
    return v.get<std::string>();
}

} // namespace

ScheduledCircuit import_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1 + std::count(text.begin(),
                                          text.begin() + std::min(e.byte, text.size()), '\n');
        throw SchemaError("", "parse error at line " + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_object()) throw SchemaError("", "schema: document must be an object");

    ScheduledCircuit c;
    if (as_int(require(doc, "version", ""), "version") != 1)
        throw SchemaError("version", "schema: unsupported version");

    const json& arch = require(doc, "architecture", "");
    try {
        c.arch.kind = arch_kind_from_string(as_string(require(arch, "kind", "architecture"),
                                                      "architecture.kind"));
    } catch (const ParameterError& e) {
        throw SchemaError("architecture.kind", std::string("schema: ") + e.what());
    }
    c.arch.size = as_int(require(arch, "size", "architecture"), "architecture.size");
    c.arch.faulty = as_int_array(require(arch, "faulty", "architecture"), "architecture.faulty");

    try {
        c.mode = mode_from_string(as_string(require(doc, "mode", ""), "mode"));
    } catch (const std::invalid_argument& e) {
        throw SchemaError("mode", std::string("schema: ") + e.what());
    }
    c.initial_mapping.log_to_phys =
        as_int_array(require(doc, "initial_mapping", ""), "initial_mapping");

    int nodes = 0;
    try {
        nodes = graph_for(c.arch).node_count();
    } catch (const ParameterError& e) {
        throw SchemaError("architecture.size", std::string("schema: ") + e.what());
    }
    const int n = c.logical_count();
    Replay r = [&] {
        try {
            return Replay(c.initial_mapping, nodes);
        } catch (const CircuitError& e) {
            throw SchemaError("initial_mapping", std::string("schema: ") + e.what());
        }
    }();

    const json& layers = require(doc, "layers", "");
    if (!layers.is_array()) throw SchemaError("layers", "schema: 'layers' must be an array");
    c.layers.reserve(layers.size());
    for (std::size_t t = 0; t < layers.size(); ++t) {
        const std::string lpath = "layers[" + std::to_string(t) + "]";
        const json& jl = layers[t];
        if (!jl.is_array()) throw SchemaError(lpath, "schema: '" + lpath + "' must be an array");
        Layer layer;
        layer.reserve(jl.size());
        for (std::size_t i = 0; i < jl.size(); ++i) {
            const std::string opath = lpath + "[" + std::to_string(i) + "]";
            const json& jo = jl[i];
            const std::string g = as_string(require(jo, "g", opath), opath + ".g");
            auto check_logical = [&](int l, const std::string& path) {
                if (l < 0 || l >= n) throw SchemaError(path, "schema: logical index out of range");
            };
            if (g == "h") {
                auto q = as_int_array(require(jo, "q", opath), opath + ".q");
                if (q.size() != 1) throw SchemaError(opath + ".q", "schema: h takes one qubit");
                check_logical(q[0], opath + ".q");
                layer.push_back(PlacedOp::h(q[0], r.l2p[q[0]]));
            } else if (g == "cp") {
                auto q = as_int_array(require(jo, "q", opath), opath + ".q");
                if (q.size() != 2 || q[0] >= q[1])
                    throw SchemaError(opath + ".q", "schema: cp takes an increasing qubit pair");
                check_logical(q[0], opath + ".q");
                check_logical(q[1], opath + ".q");
                int k = as_int(require(jo, "k", opath), opath + ".k");
                if (k != q[1] - q[0])
                    throw SchemaError(opath + ".k", "schema: k must equal q[1] - q[0]");
                layer.push_back(PlacedOp::cp(q[0], q[1], r.l2p[q[0]], r.l2p[q[1]]));
            } else if (g == "swap") {
                auto p = as_int_array(require(jo, "p", opath), opath + ".p");
                if (p.size() != 2) throw SchemaError(opath + ".p", "schema: swap takes two qubits");
                for (int x : p)
                    if (x < 0 || x >= nodes)
                        throw SchemaError(opath + ".p", "schema: physical index out of range");
                layer.push_back(PlacedOp::swap(p[0], p[1]));
            } else {
                throw SchemaError(opath + ".g", "schema: unknown gate '" + g + "'");
            }
        }
        for (const auto& op : layer)
            if (op.gate == Gate::SWAP && op.p0 != op.p1) r.swap(op.p0, op.p1);
        c.layers.push_back(std::move(layer));
    }
    return c;
}

std::string export_qasm(const ScheduledCircuit& c) {
    int nodes = graph_for(c.arch).node_count();
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(nodes) + "];\n";
    auto reg = [&](int p) { return "q[" + std::to_string(p) + "]"; };
    for (const auto& layer : c.layers) {
        for (const auto& op : layer) {
            switch (op.gate) {
            case Gate::H: out += "h " + reg(op.p0) + ";\n"; break;
            case Gate::CP:
                out += op.k == 1 ? "cp(pi/2) " : "cp(pi/2^" + std::to_string(op.k) + ") ";
                out += reg(op.p0) + "," + reg(op.p1) + ";\n";
                break;
            case Gate::SWAP: out += "swap " + reg(op.p0) + "," + reg(op.p1) + ";\n"; break;
            }
        }
        out += "barrier q;\n";
    }
    return out;
}

} // namespace qftatlas
