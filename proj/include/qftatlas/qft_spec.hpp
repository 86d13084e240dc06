#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qftatlas/circuit.hpp"

namespace qftatlas {

struct LogicalGate {
    Gate kind = Gate::H;
    int a = 0;  // H qubit, or CPHASE control
    int b = -1; // CPHASE target, a < b
    bool operator==(const LogicalGate&) const = default;
    auto operator<=>(const LogicalGate&) const = default;

    static LogicalGate h(int q) { return {Gate::H, q, -1}; }
    static LogicalGate cp(int i, int j) { return {Gate::CP, i, j}; }
};

struct DependencyOrder {
    Mode mode = Mode::Relaxed;
    int n = 0;
    std::vector<std::pair<LogicalGate, LogicalGate>> generators;
};

// Reference order: for each i, H(i) then CPHASE(i, j) for j > i.
std::vector<LogicalGate> logical_gates(int n);

DependencyOrder dependency_generators(int n, Mode mode);

// Streams the same generator set without materializing it.
void for_each_generator(int n, Mode mode,
                        const std::function<void(const LogicalGate&, const LogicalGate&)>& fn);

// Dense gate -> layer table; -1 means the gate never ran.
class GateLayers {
public:
    explicit GateLayers(int n);
    int n() const { return n_; }
    int& h(int q) { return h_[q]; }
    int h(int q) const { return h_[q]; }
    int& cp(int i, int j) { return cp_[index(i, j)]; }
    int cp(int i, int j) const { return cp_[index(i, j)]; }
    int at(const LogicalGate& g) const { return g.kind == Gate::H ? h(g.a) : cp(g.a, g.b); }
    int& at(const LogicalGate& g) { return g.kind == Gate::H ? h(g.a) : cp(g.a, g.b); }

private:
    std::size_t index(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_;
    std::vector<int> h_;
    std::vector<int> cp_;
};

struct OrderViolation {
    LogicalGate before;
    LogicalGate after;
    int layer_before = -1;
    int layer_after = -1;
};

struct OrderCheck {
    std::vector<OrderViolation> violations;
    long long violation_count = 0;
    std::vector<LogicalGate> missing;
};

// Gates absent from the table are reported as missing and their generators skipped.
OrderCheck check_order(int n, Mode mode, const GateLayers& layers, std::size_t cap = SIZE_MAX);

} // namespace qftatlas
