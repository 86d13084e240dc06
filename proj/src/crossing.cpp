#include "qftatlas/crossing.hpp"

#include <stdexcept>

namespace qftatlas {

void block_crossing(Builder& b, const std::vector<int>& path, int a_len,
                    const std::function<void(int)>& after_swap) {
    const int len = static_cast<int>(path.size());
    if (a_len < 0 || a_len > len) throw std::invalid_argument("block_crossing: bad split");
    const int b_len = len - a_len;
    if (a_len == 0 || b_len == 0) return;
    std::vector<char> is_a(len, 0);
    for (int i = 0; i < a_len; ++i) is_a[i] = 1;
    const int rounds = a_len + b_len - 1;
    for (int r = 0; r < rounds; ++r) {
        for (int p = (a_len - 1 + r) % 2; p + 1 < len; p += 2) {
            if (!is_a[p] || is_a[p + 1]) continue;
            b.cp(path[p], path[p + 1]);
            b.swap(path[p], path[p + 1]);
            is_a[p] = 0;
            is_a[p + 1] = 1;
            if (after_swap) after_swap(p);
        }
    }
}

} // namespace qftatlas
