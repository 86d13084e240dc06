#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qftatlas {

enum class ArchKind { LNN, Grid, Sycamore, HeavyHex };

std::string to_string(ArchKind kind);
ArchKind arch_kind_from_string(const std::string& s);

// Raised for every invalid architecture size; `param` names the offending rule.
class ParameterError : public std::invalid_argument {
public:
    ParameterError(std::string param, const std::string& what)
        : std::invalid_argument(what), param_(std::move(param)) {}
    const std::string& param() const { return param_; }

private:
    std::string param_;
};

struct Coord {
    int row = 0;
    int col = 0;
};

class CouplingGraph {
public:
    CouplingGraph(ArchKind kind, int size_param, int node_count,
                  std::vector<std::pair<int, int>> edges, std::vector<Coord> coords);

    ArchKind kind() const { return kind_; }
    int size_param() const { return size_param_; }
    int node_count() const { return node_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int q) const { return adj_.at(q); }
    // Grid/Sycamore: (row, col). HeavyHex: path nodes (0, position), danglers (1, anchor).
    const Coord& coord(int q) const { return coords_.at(q); }
    bool has_edge(int a, int b) const;
    bool connected() const;
    int degree(int q) const { return static_cast<int>(adj_.at(q).size()); }

    // Grid and Sycamore only.
    int index(int row, int col) const { return row * size_param_ + col; }
    // HeavyHex only.
    int path_length() const;
    int dangler_of_group(int group) const;
    bool is_dangler(int q) const;

private:
    ArchKind kind_;
    int size_param_;
    int node_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Coord> coords_;
    std::vector<std::vector<int>> adj_;
};

// anchor: index inside each on-path group of 4 that carries the dangler.
CouplingGraph build_architecture(ArchKind kind, int size_param, int heavyhex_anchor = 3);

enum class UnitKind { Row, TwoRow, OnPath, OffPath, Line };

struct Unit {
    int id = 0;
    std::vector<int> qubit_line;
    UnitKind kind = UnitKind::Line;
};

struct UnitPartition {
    std::vector<Unit> units;
    std::vector<std::pair<int, int>> unit_adjacency;
};

UnitPartition unit_partition(const CouplingGraph& graph);

std::vector<std::pair<int, int>> boundary_links(const UnitPartition& partition,
                                                const CouplingGraph& graph, int u, int v);

} // namespace qftatlas
