#pragma once

#include <string>
#include <vector>

#include "tautring/liu_xu.hpp"
#include "tautring/partitions.hpp"
#include "tautring/rational.hpp"

namespace tautring {

/// Exact-rational pairing matrix with labeled rows/columns and the
/// construction path it came from.
struct PairingMatrix {
    enum class Construction { P, PSub, QBlock, QDirect };

    unsigned genus = 0;
    unsigned degree = 0;
    Construction construction = Construction::P;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<Rational>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? col_labels.size() : entries[0].size(); }
    const Rational& at(std::size_t r, std::size_t c) const { return entries[r][c]; }

    PairingMatrix transpose() const;
    bool same_entries(const PairingMatrix& o) const;

    std::string construction_name() const;
    std::string to_json() const;
    std::string to_csv() const;
};

// P_{g,i}: p(i) x p(g-2-i), entry (k,l) = r(kappa_k * kappa_l).
PairingMatrix build_p_matrix(LiuXuTable& table, unsigned g, unsigned i);

// P_{g,i}^j: rows of P_{g,i} whose label contains a factor kappa_j (j >= 1);
// j = 0 gives (2g-2) P_{g,i}; j = -1 the zero matrix p(i+1) x p(g-2-i).
PairingMatrix sub_p_matrix(LiuXuTable& table, unsigned g, unsigned i, int j);

// Q_{g,i} assembled from P-submatrix blocks (the single-row direct form
// for i = 0).  0 <= i <= g-1.
PairingMatrix build_q_matrix(LiuXuTable& table, unsigned g, unsigned i);

// Independent oracle: each entry obtained by pushing K^{a+b} kappa_I kappa_J
// down to M_g with the symbolic engine and reading off the kappa_{g-2}
// multiple.
PairingMatrix build_q_matrix_direct(LiuXuTable& table, unsigned g, unsigned i);

} // namespace tautring
