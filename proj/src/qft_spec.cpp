#include "qftatlas/qft_spec.hpp"

#include <stdexcept>

namespace qftatlas {

std::vector<LogicalGate> logical_gates(int n) {
    if (n < 1) throw std::invalid_argument("logical_gates: n must be >= 1");
    std::vector<LogicalGate> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i) {
        out.push_back(LogicalGate::h(i));
        for (int j = i + 1; j < n; ++j) out.push_back(LogicalGate::cp(i, j));
    }
    return out;
}

void for_each_generator(int n, Mode mode,
                        const std::function<void(const LogicalGate&, const LogicalGate&)>& fn) {
    using G = LogicalGate;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            fn(G::h(i), G::cp(i, j));
            fn(G::cp(i, j), G::h(j));
        }
    }
    if (mode == Mode::Relaxed) return;
    // same control, increasing target
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j + 1 < n; ++j) fn(G::cp(i, j), G::cp(i, j + 1));
    // same target, increasing control
    for (int j = 0; j < n; ++j)
        for (int i = 0; i + 1 < j; ++i) fn(G::cp(i, j), G::cp(i + 1, j));
    // target of one is control of the next
    for (int j = 1; j + 1 < n; ++j) fn(G::cp(j - 1, j), G::cp(j, j + 1));
}

DependencyOrder dependency_generators(int n, Mode mode) {
    DependencyOrder d{mode, n, {}};
    for_each_generator(n, mode, [&](const LogicalGate& a, const LogicalGate& b) {
        d.generators.emplace_back(a, b);
    });
    return d;
}

GateLayers::GateLayers(int n)
    : n_(n), h_(n, -1), cp_(static_cast<std::size_t>(n) * n, -1) {}

OrderCheck check_order(int n, Mode mode, const GateLayers& layers, std::size_t cap) {
    OrderCheck res;
    for (int i = 0; i < n; ++i) {
        if (layers.h(i) < 0) res.missing.push_back(LogicalGate::h(i));
        for (int j = i + 1; j < n; ++j)
            if (layers.cp(i, j) < 0) res.missing.push_back(LogicalGate::cp(i, j));
    }
    for_each_generator(n, mode, [&](const LogicalGate& a, const LogicalGate& b) {
        int ta = layers.at(a), tb = layers.at(b);
        if (ta < 0 || tb < 0 || ta < tb) return;
        ++res.violation_count;
        if (res.violations.size() < cap) res.violations.push_back({a, b, ta, tb});
    });
    return res;
}

} // namespace qftatlas
