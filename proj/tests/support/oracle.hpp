#pragma once

// Reference checks written from the definitions alone, without touching the library's verifier,
// dependency generators or graph builder. Tests compare the library against these.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qftatlas/circuit.hpp"

namespace oracle {

using qftatlas::ArchKind;
using qftatlas::Gate;
using qftatlas::Mode;
using qftatlas::ScheduledCircuit;

inline int node_count(ArchKind kind, int size) {
    switch (kind) {
    case ArchKind::LNN:
    case ArchKind::HeavyHex: return size;
    default: return size * size;
    }
}

// Tests every unordered pair against the coordinate rule.
inline std::set<std::pair<int, int>> edges(ArchKind kind, int size) {
    const int n = node_count(kind, size);
    auto linked = [&](int a, int b) {
        switch (kind) {
        case ArchKind::LNN: return b == a + 1;
        case ArchKind::Grid: {
            int ra = a / size, ca = a % size, rb = b / size, cb = b % size;
            return std::abs(ra - rb) + std::abs(ca - cb) == 1;
        }
        case ArchKind::Sycamore: {
            int ra = a / size, ca = a % size, rb = b / size, cb = b % size;
            if (rb != ra + 1) return false;
            if (cb == ca) return true;
            return ra % 2 == 0 ? cb == ca - 1 : cb == ca + 1;
        }
        case ArchKind::HeavyHex: {
            const int path = size / 5 * 4;
            if (a < path && b < path) return b == a + 1;
            if (a < path && b >= path) return a == (b - path) * 4 + 3;
            return false;
        }
        }
        return false;
    };
    std::set<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (linked(a, b)) out.insert({a, b});
    return out;
}

struct Result {
    bool valid = true;
    std::string why;
    std::vector<int> final_l2p;
    long long swaps = 0, cphases = 0, hs = 0;
    int depth = 0;
};

// Replays the circuit gate by gate. A QFT schedule is valid when every op sits on a real link,
// no qubit is used twice in a layer, every gate acts on the logical qubits it claims, every H
// and CPHASE runs exactly once and the gate order respects `mode`.
//
// Order rule. Strict: every logical qubit sees exactly the gate sequence of the textbook circuit,
// CP(0,q) .. CP(q-1,q), H(q), CP(q,q+1) .. CP(q,n-1). Relaxed: H(i) < CP(i,j) < H(j).
inline Result check(const ScheduledCircuit& c, Mode mode) {
    Result r;
    auto fail = [&](std::string why) {
        if (r.valid) r.why = std::move(why);
        r.valid = false;
    };
    const int nodes = node_count(c.arch.kind, c.arch.size);
    const auto links = edges(c.arch.kind, c.arch.size);
    std::vector<char> faulty(nodes, 0);
    for (int f : c.arch.faulty)
        if (f >= 0 && f < nodes) faulty[f] = 1;

    const int n = c.logical_count();
    std::vector<int> p2l(nodes, -1);
    std::vector<int> l2p = c.initial_mapping.log_to_phys;
    for (int l = 0; l < n; ++l) {
        int p = l2p[l];
        if (p < 0 || p >= nodes || p2l[p] != -1 || faulty[p]) {
            fail("bad initial mapping");
            r.final_l2p = l2p;
            return r;
        }
        p2l[p] = l;
    }

    std::vector<int> h_layer(n, -1);
    std::vector<int> cp_layer(static_cast<std::size_t>(n) * n, -1);
    // per-qubit gate sequence, encoded as (kind, other) with kind 0 = CP, 1 = H
    std::vector<std::vector<std::pair<int, int>>> seq(n);

    auto phys_ok = [&](int p) { return p >= 0 && p < nodes && !faulty[p]; };
    std::vector<int> used(nodes, -1);
    for (int t = 0; t < static_cast<int>(c.layers.size()); ++t) {
        for (const auto& op : c.layers[t]) {
            std::vector<int> qs{op.p0};
            if (op.gate != Gate::H) qs.push_back(op.p1);
            for (int p : qs) {
                if (!phys_ok(p)) {
                    fail("op on missing or faulty qubit at layer " + std::to_string(t));
                    continue;
                }
                if (used[p] == t) fail("qubit reused in layer " + std::to_string(t));
                used[p] = t;
            }
            if (!r.valid) continue;
            if (op.gate != Gate::H) {
                auto e = std::minmax(op.p0, op.p1);
                if (!links.count({e.first, e.second})) fail("non-edge at layer " + std::to_string(t));
            }
            switch (op.gate) {
            case Gate::H:
                ++r.hs;
                if (op.l0 < 0 || op.l0 >= n || p2l[op.p0] != op.l0) {
                    fail("H label mismatch at layer " + std::to_string(t));
                    break;
                }
                if (h_layer[op.l0] != -1) fail("duplicate H");
                h_layer[op.l0] = t;
                seq[op.l0].push_back({1, op.l0});
                break;
            case Gate::CP: {
                ++r.cphases;
                int a = p2l[op.p0], b = p2l[op.p1];
                if (a < 0 || b < 0 || std::minmax(a, b) != std::minmax(op.l0, op.l1)) {
                    fail("CPHASE label mismatch at layer " + std::to_string(t));
                    break;
                }
                if (a > b) std::swap(a, b);
                auto& slot = cp_layer[static_cast<std::size_t>(a) * n + b];
                if (slot != -1) fail("duplicate CPHASE");
                slot = t;
                seq[a].push_back({0, b});
                seq[b].push_back({0, a});
                break;
            }
            case Gate::SWAP: {
                ++r.swaps;
                int a = p2l[op.p0], b = p2l[op.p1];
                p2l[op.p0] = b;
                p2l[op.p1] = a;
                if (a >= 0) l2p[a] = op.p1;
                if (b >= 0) l2p[b] = op.p0;
                break;
            }
            }
        }
    }
    r.depth = static_cast<int>(c.layers.size());
    r.final_l2p = l2p;
    if (!r.valid) return r;

    for (int i = 0; i < n; ++i) {
        if (h_layer[i] == -1) fail("missing H(" + std::to_string(i) + ")");
        for (int j = i + 1; j < n; ++j)
            if (cp_layer[static_cast<std::size_t>(i) * n + j] == -1)
                fail("missing CPHASE(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (!r.valid) return r;

    if (mode == Mode::Strict) {
        for (int q = 0; q < n; ++q) {
            std::vector<std::pair<int, int>> want;
            for (int i = 0; i < q; ++i) want.push_back({0, i});
            want.push_back({1, q});
            for (int j = q + 1; j < n; ++j) want.push_back({0, j});
            if (seq[q] != want) {
                fail("gate order broken on logical " + std::to_string(q));
                break;
            }
        }
    } else {
        for (int i = 0; i < n && r.valid; ++i)
            for (int j = i + 1; j < n; ++j) {
                int g = cp_layer[static_cast<std::size_t>(i) * n + j];
                if (!(h_layer[i] < g && g < h_layer[j])) {
                    fail("H order broken around CPHASE(" + std::to_string(i) + "," + std::to_string(j) + ")");
                    break;
                }
            }
    }
    return r;
}

inline std::vector<int> reversed_identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
    return v;
}

} // namespace oracle
