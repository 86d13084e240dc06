#include "qftatlas/topology.hpp"

#include <algorithm>
#include <queue>

namespace qftatlas {

std::string to_string(ArchKind kind) {
    switch (kind) {
    case ArchKind::LNN: return "lnn";
    case ArchKind::Grid: return "grid";
    case ArchKind::Sycamore: return "sycamore";
    case ArchKind::HeavyHex: return "heavyhex";
    }
    return "?";
}

ArchKind arch_kind_from_string(const std::string& s) {
    if (s == "lnn") return ArchKind::LNN;
    if (s == "grid") return ArchKind::Grid;
    if (s == "sycamore") return ArchKind::Sycamore;
    if (s == "heavyhex") return ArchKind::HeavyHex;
    throw ParameterError("kind", "unknown architecture kind '" + s + "'");
}

CouplingGraph::CouplingGraph(ArchKind kind, int size_param, int node_count,
                             std::vector<std::pair<int, int>> edges, std::vector<Coord> coords)
    : kind_(kind), size_param_(size_param), node_count_(node_count), edges_(std::move(edges)),
      coords_(std::move(coords)), adj_(node_count) {
    for (auto& [a, b] : edges_) {
        if (a > b) std::swap(a, b);
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& v : adj_) std::sort(v.begin(), v.end());
}

bool CouplingGraph::has_edge(int a, int b) const {
    if (a < 0 || b < 0 || a >= node_count_ || b >= node_count_) return false;
    const auto& v = adj_[a];
    return std::binary_search(v.begin(), v.end(), b);
}

bool CouplingGraph::connected() const {
    if (node_count_ == 0) return true;
    std::vector<char> seen(node_count_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj_[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                q.push(y);
            }
        }
    }
    return count == node_count_;
}

int CouplingGraph::path_length() const {
    if (kind_ != ArchKind::HeavyHex) throw std::logic_error("path_length: not a heavy-hex graph");
    return size_param_ / 5 * 4;
}

int CouplingGraph::dangler_of_group(int group) const { return path_length() + group; }

bool CouplingGraph::is_dangler(int q) const {
    return kind_ == ArchKind::HeavyHex && q >= path_length();
}

CouplingGraph build_architecture(ArchKind kind, int size_param, int heavyhex_anchor) {
    std::vector<std::pair<int, int>> edges;
    std::vector<Coord> coords;
    switch (kind) {
    case ArchKind::LNN: {
        if (size_param < 1) throw ParameterError("n", "lnn: n must be >= 1");
        for (int i = 0; i < size_param; ++i) coords.push_back({0, i});
        for (int i = 0; i + 1 < size_param; ++i) edges.emplace_back(i, i + 1);
        return CouplingGraph(kind, size_param, size_param, std::move(edges), std::move(coords));
    }
    case ArchKind::Grid: {
        const int m = size_param;
        if (m < 2) throw ParameterError("m", "grid: m must be >= 2");
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) coords.push_back({r, c});
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) {
                if (c + 1 < m) edges.emplace_back(r * m + c, r * m + c + 1);
                if (r + 1 < m) edges.emplace_back(r * m + c, (r + 1) * m + c);
            }
        }
        return CouplingGraph(kind, m, m * m, std::move(edges), std::move(coords));
    }
    case ArchKind::Sycamore: {
        const int m = size_param;
        if (m < 2) throw ParameterError("m", "sycamore: m must be >= 2");
        if (m % 2 != 0) throw ParameterError("m_parity", "sycamore: m must be even");
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) coords.push_back({r, c});
        for (int r = 0; r + 1 < m; ++r) {
            for (int c = 0; c < m; ++c) {
                edges.emplace_back(r * m + c, (r + 1) * m + c);
                int dc = (r % 2 == 0) ? c - 1 : c + 1;
                if (dc >= 0 && dc < m) edges.emplace_back(r * m + c, (r + 1) * m + dc);
            }
        }
        return CouplingGraph(kind, m, m * m, std::move(edges), std::move(coords));
    }
    case ArchKind::HeavyHex: {
        const int n = size_param;
        if (n < 1) throw ParameterError("n", "heavyhex: n must be >= 1");
        if (n % 5 != 0) throw ParameterError("n_mod5", "heavyhex: n must be a multiple of 5");
        if (heavyhex_anchor < 0 || heavyhex_anchor > 3)
            throw ParameterError("anchor", "heavyhex: anchor must be in [0, 3]");
        const int groups = n / 5;
        const int path = groups * 4;
        for (int i = 0; i < path; ++i) coords.push_back({0, i});
        for (int g = 0; g < groups; ++g) coords.push_back({1, 4 * g + heavyhex_anchor});
        for (int i = 0; i + 1 < path; ++i) edges.emplace_back(i, i + 1);
        for (int g = 0; g < groups; ++g) edges.emplace_back(4 * g + heavyhex_anchor, path + g);
        return CouplingGraph(kind, n, n, std::move(edges), std::move(coords));
    }
    }
    throw ParameterError("kind", "unknown architecture kind");
}

UnitPartition unit_partition(const CouplingGraph& g) {
    UnitPartition part;
    switch (g.kind()) {
    case ArchKind::LNN: {
        Unit u{0, {}, UnitKind::Line};
        for (int i = 0; i < g.node_count(); ++i) u.qubit_line.push_back(i);
        part.units.push_back(std::move(u));
        break;
    }
    case ArchKind::Grid: {
        const int m = g.size_param();
        for (int r = 0; r < m; ++r) {
            Unit u{r, {}, UnitKind::Row};
            for (int c = 0; c < m; ++c) u.qubit_line.push_back(g.index(r, c));
            part.units.push_back(std::move(u));
            if (r > 0) part.unit_adjacency.emplace_back(r - 1, r);
        }
        break;
    }
    case ArchKind::Sycamore: {
        const int m = g.size_param();
        for (int u = 0; u < m / 2; ++u) {
            Unit unit{u, {}, UnitKind::TwoRow};
            for (int p = 0; p < 2 * m; ++p) unit.qubit_line.push_back(g.index(2 * u + p % 2, p / 2));
            part.units.push_back(std::move(unit));
            if (u > 0) part.unit_adjacency.emplace_back(u - 1, u);
        }
        break;
    }
    case ArchKind::HeavyHex: {
        const int groups = g.size_param() / 5;
        for (int c = 0; c < groups; ++c) {
            Unit on{2 * c, {4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3}, UnitKind::OnPath};
            Unit off{2 * c + 1, {g.dangler_of_group(c)}, UnitKind::OffPath};
            part.units.push_back(std::move(on));
            part.units.push_back(std::move(off));
            part.unit_adjacency.emplace_back(2 * c, 2 * c + 1);
            if (c + 1 < groups) part.unit_adjacency.emplace_back(2 * c, 2 * c + 2);
        }
        break;
    }
    }
    return part;
}

std::vector<std::pair<int, int>> boundary_links(const UnitPartition& part, const CouplingGraph& g,
                                                int u, int v) {
    const int count = static_cast<int>(part.units.size());
    if (u < 0 || v < 0 || u >= count || v >= count)
        throw std::out_of_range("boundary_links: unknown unit id");
    if (u == v) throw std::invalid_argument("boundary_links: u == v");
    std::vector<std::pair<int, int>> out;
    const auto& lu = part.units[u].qubit_line;
    const auto& lv = part.units[v].qubit_line;
    for (int a : lu)
        for (int b : lv)
            if (g.has_edge(a, b)) out.emplace_back(a, b);
    // order along the lines: by position in u, then position in v
    auto pos = [](const std::vector<int>& line, int q) {
        return std::find(line.begin(), line.end(), q) - line.begin();
    };
    std::sort(out.begin(), out.end(), [&](auto& x, auto& y) {
        auto kx = pos(lu, x.first) + pos(lv, x.second);
        auto ky = pos(lu, y.first) + pos(lv, y.second);
        if (kx != ky) return kx < ky;
        return pos(lu, x.first) < pos(lu, y.first);
    });
    return out;
}

} // namespace qftatlas
