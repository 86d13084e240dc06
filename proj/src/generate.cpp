#include "qftatlas/generate.hpp"

#include "qftatlas/faults.hpp"
#include "qftatlas/grid.hpp"
#include "qftatlas/heavyhex.hpp"
#include "qftatlas/lnn.hpp"
#include "qftatlas/sycamore.hpp"

namespace qftatlas {

ScheduledCircuit generate(const GenRequest& req) {
    // validates the size before anything else
    build_architecture(req.kind, req.size);
    if (!req.faulty.empty() && (req.kind == ArchKind::LNN || req.kind == ArchKind::Grid))
        throw ParameterError("faulty", "fault handling covers heavy-hex and sycamore only");
    switch (req.kind) {
    case ArchKind::LNN: return lnn_qft(req.size, req.mode);
    case ArchKind::Grid: return grid_qft(req.size, req.mode);
    case ArchKind::Sycamore:
        return req.faulty.empty() ? syc_qft(req.size, req.mode)
                                  : syc_qft_faulty(req.size, {req.faulty}, req.mode, req.corridor);
    case ArchKind::HeavyHex:
        return req.faulty.empty() ? hh_qft(req.size, req.mode) : hh_qft_faulty(req.size, {req.faulty}, req.mode);
    }
    throw ParameterError("kind", "unknown architecture");
}

} // namespace qftatlas
