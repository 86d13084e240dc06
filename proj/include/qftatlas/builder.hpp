#pragma once

#include <utility>
#include <vector>

#include "qftatlas/circuit.hpp"
#include "qftatlas/topology.hpp"

namespace qftatlas {

// Takes a sequential op stream in physical terms and packs it as-soon-as-possible: each op lands
// one layer after the last op on any of its qubits. Per-qubit order is kept, so the packed
// circuit runs every logical qubit's gates in stream order.
class Builder {
public:
    Builder(const CouplingGraph& graph, std::vector<int> initial_log_to_phys);

    void h(int phys);
    void cp(int pa, int pb);
    void swap(int pa, int pb);
    // Keeps later ops on `phys` from landing before the current end of any of them.
    void align(const std::vector<int>& phys);

    int logical_at(int phys) const { return p2l_[phys]; }
    int phys_of(int logical) const { return l2p_[logical]; }
    int logical_count() const { return static_cast<int>(l2p_.size()); }
    int depth() const { return static_cast<int>(layers_.size()); }
    int front(int phys) const { return front_[phys]; }
    const CouplingGraph& graph() const { return graph_; }

    // With `drop_dead_swaps`, SWAPs whose two contents never take part in another gate are
    // removed and the stream is repacked. Only the final mapping changes.
    ScheduledCircuit finish(ArchDescriptor arch, Mode mode, bool drop_dead_swaps = false) &&;

private:
    int place(int t, const PlacedOp& op);
    void link(int pa, int pb) const;

    const CouplingGraph& graph_;
    std::vector<int> initial_;
    std::vector<int> l2p_;
    std::vector<int> p2l_;
    std::vector<int> front_;
    std::vector<Layer> layers_;
    std::vector<PlacedOp> stream_;
    // align() calls, keyed by the stream position they precede; replayed when repacking
    std::vector<std::pair<std::size_t, std::vector<int>>> barriers_;
};

} // namespace qftatlas
