#pragma once

#include <string>
#include <vector>

#include "tautring/multi_index.hpp"

namespace tautring {

// p(d), with p(0) = 1 (the empty partition).
unsigned long partition_count(unsigned d);

// All p(d) multi-indices with |m| = d, ascending under <_kappa.
std::vector<MultiIndex> enumerate_kappa_monomials(unsigned d);

/// K^j * kappa_m on the universal curve; degree j + |m|.
struct CgMonomial {
    unsigned k_power = 0;
    MultiIndex kappa;

    unsigned degree() const { return k_power + kappa.degree(); }
    // e.g. "K^2*k1", "1" for the unit monomial.
    std::string label() const;

    bool operator==(const CgMonomial& o) const = default;
};

// <_*: K-power ascending, ties by <_kappa.
bool star_less(const CgMonomial& a, const CgMonomial& b);

// All sum_{r=0}^{d} p(r) monomials of degree d, ascending under <_*.
std::vector<CgMonomial> enumerate_cg_monomials(unsigned d);

} // namespace tautring
