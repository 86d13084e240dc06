#pragma once

#include <functional>
#include <vector>

#include "qftatlas/builder.hpp"

namespace qftatlas {

// Block crossing on a path: the first `a_len` qubits of `path` trade places with the rest by
// odd-even transposition, with a CPHASE right before every SWAP. Every A-B pair meets once, in
// order of distance from the seam, so ranks ascending away from the seam on both sides give the
// strict order. `after_swap(pos)` runs after each SWAP of path positions (pos, pos+1).
void block_crossing(Builder& b, const std::vector<int>& path, int a_len,
                    const std::function<void(int pos)>& after_swap = {});

} // namespace qftatlas
