#include "qftatlas/unit_driver.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qftatlas {

void run_unit_lnn(int units, const UnitSchedule& s, bool skip_last_exchange) {
    if (units < 1) throw std::invalid_argument("run_unit_lnn: no units");
    std::vector<int> content(units);
    for (int i = 0; i < units; ++i) content[i] = i;
    std::vector<char> done(units, 0);
    auto ia = [&](int slot) {
        if (done[content[slot]]) return;
        done[content[slot]] = 1;
        s.ia(slot);
    };
    ia(0);
    const int rounds = 2 * units - 3;
    for (int r = 1; r <= rounds; ++r) {
        if (s.round_start) s.round_start(r);
        const int hi = std::min(r - 1, 2 * units - 3 - r);
        for (int p = (r - 1) % 2; p <= hi; p += 2) {
            const bool exchange = !(skip_last_exchange && r == rounds);
            s.crossing(p, exchange);
            if (exchange) std::swap(content[p], content[p + 1]);
        }
        ia(0);
    }
    for (int slot = 0; slot < units; ++slot) ia(slot);
}

} // namespace qftatlas
