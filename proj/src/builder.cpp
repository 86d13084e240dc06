#include "qftatlas/builder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qftatlas {

Builder::Builder(const CouplingGraph& graph, std::vector<int> initial)
    : graph_(graph), initial_(initial), l2p_(std::move(initial)), p2l_(graph.node_count(), -1),
      front_(graph.node_count(), 0) {
    for (int l = 0; l < static_cast<int>(l2p_.size()); ++l) {
        int p = l2p_[l];
        if (p < 0 || p >= graph.node_count() || p2l_[p] != -1)
            throw std::logic_error("builder: bad initial mapping");
        p2l_[p] = l;
    }
}

void Builder::link(int pa, int pb) const {
    if (!graph_.has_edge(pa, pb))
        throw std::logic_error("builder: no link " + std::to_string(pa) + "-" + std::to_string(pb));
}

int Builder::place(int t, const PlacedOp& op) {
    if (static_cast<int>(layers_.size()) <= t) layers_.resize(t + 1);
    layers_[t].push_back(op);
    stream_.push_back(op);
    return t;
}

void Builder::h(int p) {
    int l = p2l_.at(p);
    if (l < 0) throw std::logic_error("builder: H on empty qubit " + std::to_string(p));
    int t = front_[p];
    place(t, PlacedOp::h(l, p));
    front_[p] = t + 1;
}

void Builder::cp(int pa, int pb) {
    link(pa, pb);
    int la = p2l_[pa], lb = p2l_[pb];
    if (la < 0 || lb < 0) throw std::logic_error("builder: CPHASE on empty qubit");
    int t = std::max(front_[pa], front_[pb]);
    place(t, PlacedOp::cp(la, lb, pa, pb));
    front_[pa] = front_[pb] = t + 1;
}

void Builder::swap(int pa, int pb) {
    link(pa, pb);
    int t = std::max(front_[pa], front_[pb]);
    place(t, PlacedOp::swap(pa, pb));
    front_[pa] = front_[pb] = t + 1;
    int la = p2l_[pa], lb = p2l_[pb];
    p2l_[pa] = lb;
    p2l_[pb] = la;
    if (la >= 0) l2p_[la] = pb;
    if (lb >= 0) l2p_[lb] = pa;
}

void Builder::align(const std::vector<int>& phys) {
    int t = 0;
    for (int p : phys) t = std::max(t, front_[p]);
    for (int p : phys) front_[p] = t;
    barriers_.push_back({stream_.size(), phys});
}

ScheduledCircuit Builder::finish(ArchDescriptor arch, Mode mode, bool drop_dead_swaps) && {
    if (drop_dead_swaps) {
        // live[p]: the content now at p still has a gate ahead of it
        std::vector<char> live(graph_.node_count(), 0);
        std::vector<char> keep(stream_.size(), 1);
        for (std::size_t i = stream_.size(); i-- > 0;) {
            const PlacedOp& op = stream_[i];
            if (op.gate == Gate::SWAP) {
                if (!live[op.p0] && !live[op.p1]) keep[i] = 0;
                std::swap(live[op.p0], live[op.p1]);
            } else {
                live[op.p0] = 1;
                if (op.gate == Gate::CP) live[op.p1] = 1;
            }
        }
        std::vector<int> front(graph_.node_count(), 0);
        std::vector<Layer> packed;
        std::size_t next_barrier = 0;
        for (std::size_t i = 0; i < stream_.size(); ++i) {
            for (; next_barrier < barriers_.size() && barriers_[next_barrier].first == i; ++next_barrier) {
                const auto& phys = barriers_[next_barrier].second;
                int t = 0;
                for (int p : phys) t = std::max(t, front[p]);
                for (int p : phys) front[p] = t;
            }
            if (!keep[i]) continue;
            const PlacedOp& op = stream_[i];
            int t = front[op.p0];
            if (op.arity() == 2) t = std::max(t, front[op.p1]);
            if (static_cast<int>(packed.size()) <= t) packed.resize(t + 1);
            packed[t].push_back(op);
            front[op.p0] = t + 1;
            if (op.arity() == 2) front[op.p1] = t + 1;
        }
        layers_ = std::move(packed);
    }
    ScheduledCircuit c;
    c.arch = std::move(arch);
    c.mode = mode;
    c.initial_mapping.log_to_phys = std::move(initial_);
    c.layers = std::move(layers_);
    return c;
}

} // namespace qftatlas
