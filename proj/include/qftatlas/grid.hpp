#pragma once

#include <vector>

#include "qftatlas/builder.hpp"
#include "qftatlas/circuit.hpp"

namespace qftatlas {

std::vector<int> grid_row(const CouplingGraph& g, int row);

// One layer of vertical SWAPs exchanging two equal-length rows.
void grid_unit_swap(Builder& b, const std::vector<int>& top, const std::vector<int>& bottom);
void grid_unit_swap(Builder& b, int row_u, int row_v);

// All |top| x |bottom| cross-row CPHASEs, with top[c] linked to bottom[c].
// Relaxed: m rounds of {CPHASE on every vertical link, counter-phase brick-wall SWAPs};
// both rows come out reversed and stay in place.
// Strict: U-turn block crossing through the end column holding both rows' smallest ranks;
// the rows come out exchanged and each reversed.
void grid_ie(Builder& b, const std::vector<int>& top, const std::vector<int>& bottom, Mode mode);

// Logical layout: row r holds r*m .. r*m+m-1, ascending left to right on even rows and right
// to left on odd rows.
std::vector<int> grid_initial_mapping(int m);

ScheduledCircuit grid_qft(int m, Mode mode);

} // namespace qftatlas
