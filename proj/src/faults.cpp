#include "qftatlas/faults.hpp"

#include <algorithm>
#include <string>

#include "qftatlas/heavyhex.hpp"
#include "qftatlas/sycamore.hpp"
#include "qftatlas/topology.hpp"

namespace qftatlas {

namespace {

std::vector<int> normalized(const CouplingGraph& g, const FaultModel& faults) {
    std::vector<int> f = faults.faulty;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int q : f)
        if (q < 0 || q >= g.node_count())
            throw ParameterError("faulty", "qubit " + std::to_string(q) + " is not on the device");
    return f;
}

} // namespace

ScheduledCircuit hh_qft_faulty(int n, const FaultModel& faults, Mode mode) {
    const CouplingGraph g = build_architecture(ArchKind::HeavyHex, n);
    const std::vector<int> f = normalized(g, faults);
    if (f.empty()) return hh_qft(n, mode);
    for (int q : f)
        if (!g.is_dangler(q))
            throw ParameterError("faulty", "qubit " + std::to_string(q) +
                                               " is on the path; removing it would split the device");
    return hh_fat_line_qft(n, mode, f);
}

SycFaultPlan syc_fault_plan(int m, const FaultModel& faults) {
    const CouplingGraph g = build_architecture(ArchKind::Sycamore, m);
    const std::vector<int> f = normalized(g, faults);
    SycFaultPlan plan;
    const int units = m / 2;
    if (f.empty()) {
        plan.units = units;
        return plan;
    }
    plan.faulty_unit = g.coord(f.front()).row / 2;
    for (int q : f)
        if (g.coord(q).row / 2 != plan.faulty_unit)
            throw ParameterError("faulty", "faults span more than one unit");
    plan.faulty_row = g.coord(f.front()).row;
    // the buffer is the faulty row's partner in its unit, so the band is exactly one unit
    plan.buffer_row = plan.faulty_row ^ 1;
    if (units - 1 < 2)
        throw ParameterError("faulty", "excluding unit " + std::to_string(plan.faulty_unit) +
                                           " leaves fewer than two units");
    if (plan.faulty_unit != 0 && plan.faulty_unit != units - 1)
        throw ParameterError("faulty", "unit " + std::to_string(plan.faulty_unit) +
                                           " is interior; excluding it splits the device");
    plan.first_unit = plan.faulty_unit == 0 ? 1 : 0;
    plan.units = units - 1;
    return plan;
}

ScheduledCircuit syc_qft_faulty(int m, const FaultModel& faults, Mode mode, bool corridor) {
    (void)corridor;
    const CouplingGraph g = build_architecture(ArchKind::Sycamore, m);
    const std::vector<int> f = normalized(g, faults);
    if (f.empty()) return syc_qft(m, mode);
    const SycFaultPlan plan = syc_fault_plan(m, faults);
    return syc_qft_span(m, mode, plan.first_unit, plan.units, {ArchKind::Sycamore, m, f});
}

} // namespace qftatlas
