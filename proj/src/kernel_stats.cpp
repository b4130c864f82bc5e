#include "tautring/kernel_stats.hpp"

#include <stdexcept>

namespace tautring {

const std::vector<std::size_t> kATable = {1, 1, 2, 3, 5, 6, 10, 13, 18, 24, 33, 41};

std::size_t b_function(unsigned l) {
    if (l >= kATable.size()) throw std::invalid_argument("b_function: a(l) tabulated only for l <= 11");
    std::size_t b = 0;
    for (unsigned i = 0; i <= l; ++i) {
        if (i % 3 == 2) continue;
        b += kATable[l - i];
    }
    return b;
}

std::size_t b_function_recursive(unsigned l) {
    if (l >= kATable.size()) throw std::invalid_argument("b_function: a(l) tabulated only for l <= 11");
    if (l == 0) return kATable[0];
    if (l == 1) return kATable[0] + kATable[1];
    std::vector<std::size_t> b{kATable[0], kATable[0] + kATable[1]};
    std::size_t prefix = kATable[0] + kATable[1];  // sum_{i<l} a(i)
    for (unsigned m = 2; m <= l; ++m) {
        std::size_t v = 2 * prefix + kATable[m] - b[m - 1] - b[m - 2];
        b.push_back(v);
        prefix += kATable[m];
    }
    return b[l];
}

KernelStats kernel_dimension_cg(LiuXuTable& table, unsigned g, unsigned k,
                                std::size_t exact_limit) {
    if (g < 2 || k > g - 1) throw std::invalid_argument("kernel_dimension_cg: need 0 <= k <= g-1");
    KernelStats s;
    s.genus = g;
    s.codegree = k;
    s.l = 3 * static_cast<int>(k) - static_cast<int>(g) - 1;
    for (unsigned r = 0; r <= k; ++r) s.monomial_count += partition_count(r);
    PairingMatrix q = build_q_matrix(table, g, k);
    s.rank = exact_rank(q.entries, exact_limit);
    s.n = s.monomial_count - s.rank;
    return s;
}

std::size_t kernel_dimension_mg(LiuXuTable& table, unsigned g, unsigned k,
                                std::size_t exact_limit) {
    if (g < 2 || k > g - 2) throw std::invalid_argument("kernel_dimension_mg: need 0 <= k <= g-2");
    PairingMatrix p = build_p_matrix(table, g, k);
    return partition_count(k) - exact_rank(p.entries, exact_limit);
}

} // namespace tautring
