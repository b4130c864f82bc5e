#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tautring/multi_index.hpp"
#include "tautring/rational.hpp"

namespace tautring {

/// Memo table for the intersection-number constants: beta_m, gamma_m and
/// C_m are genus-independent, F_g(m) and r(kappa_m) carry the genus.
/// Thread-safe; recomputation of a value is idempotent.
class LiuXuTable {
public:
    LiuXuTable() = default;

    // beta_0 = 1; for m != 0 the unique solution of
    //   sum_{m'+m''=m} (-1)^{||m'||} beta_{m'} / (m''! (2|m''|+1)!!) = 0.
    Rational beta(const MultiIndex& m);

    // gamma_m = (-1)^{||m||} / (m! (2|m|+1)!!), closed form.
    Rational gamma(const MultiIndex& m) const;

    // C_m = sum_{m'+m''=m} 2|m'| beta_{m'} gamma_{m''}.
    Rational c_constant(const MultiIndex& m);

    // F_g(0) = 1; |m| F_g(m) = (g-1) sum_{m'+m''=m, m'!=0} C_{m'} F_g(m'').
    // Requires g >= 2 and |m| <= g-2.
    Rational f_constant(unsigned g, const MultiIndex& m);

    // r(kappa_m) = (2g-3)!! m! / (2g-2) * F_g(m); requires |m| = g-2.
    Rational r_value(unsigned g, const MultiIndex& m);

    // Cache persistence (line-oriented text, append-only).  On load,
    // duplicate keys must agree or loading throws.
    void save(const std::string& path) const;
    void load(const std::string& path);

private:
    Rational beta_locked(const MultiIndex& m);
    Rational c_locked(const MultiIndex& m);
    Rational f_locked(unsigned g, const MultiIndex& m);

    mutable std::mutex mu_;
    std::map<MultiIndex, Rational> beta_;
    std::map<MultiIndex, Rational> c_;
    std::map<std::pair<unsigned, MultiIndex>, Rational> f_;
    std::map<std::pair<unsigned, MultiIndex>, Rational> r_;
};

// Theorem of Liu and Xu: for a partition dbar = (d_1,...,d_k) of g-2 into
// positive integers,
//   sum_{sigma in S_k} r(kappa_sigma(dbar))
//     = (2g-3+k)! (2g-1)!! / ((2g-1)! prod_j (2 d_j + 1)!!),
// where kappa_sigma(dbar) multiplies one kappa class per cycle of sigma.
// Returns true iff both sides agree exactly.
bool sk_sum_check(LiuXuTable& table, unsigned g, const std::vector<unsigned>& dbar);

} // namespace tautring
