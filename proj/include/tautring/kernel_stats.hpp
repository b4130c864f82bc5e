#pragma once

#include <vector>

#include "tautring/liu_xu.hpp"
#include "tautring/rank.hpp"

namespace tautring {

/// Kernel-dimension statistics for the degree-k piece at genus g, with
/// l = 3k - g - 1 (so g = 3k - l - 1).
struct KernelStats {
    unsigned genus = 0;
    unsigned codegree = 0;      // k
    int l = 0;                  // 3k - g - 1
    std::size_t monomial_count = 0;
    std::size_t rank = 0;
    std::size_t n = 0;          // monomial_count - rank
};

// Tabulated a(l) for 0 <= l <= 11.
extern const std::vector<std::size_t> kATable;

// b(l) by the mod-3 filtered sum over the a-table; 0 <= l <= 11.
std::size_t b_function(unsigned l);

// The same b(l) by the two-step recursion (verified against the sum form
// in tests).
std::size_t b_function_recursive(unsigned l);

// n = sum_{i<=k} p(i) - rank(Q_{g,k}).  Matrices beyond `exact_limit`
// rows rely on the multi-prime modular backend alone (the large-genus
// regime where Bareiss confirmation is impractical).
KernelStats kernel_dimension_cg(LiuXuTable& table, unsigned g, unsigned k,
                                std::size_t exact_limit = 120);

// p(k) - rank(P_{g,k}); reproduces a(l) for g = 3k-l-1 with 2k <= g-2.
std::size_t kernel_dimension_mg(LiuXuTable& table, unsigned g, unsigned k,
                                std::size_t exact_limit = 120);

} // namespace tautring
