#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautring/partitions.hpp"
#include "tautring/taut_expression.hpp"

namespace tautring {

/// A relation in the degree-i piece of the ring of the universal curve:
/// a vector over the ordered monomial basis enumerate_cg_monomials(i),
/// normalized to content-free integers with positive leading entry, plus
/// the (chern index, monomial) recipe that produced it.
struct Relation {
    unsigned genus = 0;
    unsigned degree = 0;
    std::vector<Rational> coeffs;
    unsigned chern_index = 0;   // j in M * c_j(F_{2g-1} - E)
    std::string monomial;       // recipe label of M

    bool is_zero() const;
    // e.g. "42*K^2 - 21/2*K*k1 + 7/48*k1^2 = 0" (from the raw vector).
    std::string pretty(const std::vector<CgMonomial>& basis) const;
};

// Scale to content-free integers, positive leading (first nonzero) entry.
void normalize_relation_vector(std::vector<Rational>& v);

// The monomial family M_0..M_{q-2} multiplying c_j(F_{2g-1}-E) to land in
// degree i; q = 2g+2i-2j-1 must lie in [1, 2g-1].  Each member has degree
// i + 2g - 2 - j on C_g^{2g-1}.
std::vector<TautMonomial> faber_monomials(unsigned g, unsigned i, unsigned j);

// Pushes M * c_j(F_{2g-1}-E) down to the universal curve and expands it in
// the degree-i monomial basis.  Requires j >= g and deg(M) = i + 2g - 2 - j.
Relation push_relation(unsigned g, unsigned i, unsigned j, const TautMonomial& m);

/// Row space of the relations found within budget, kept in reduced echelon
/// form alongside the generating rows and their recipes.
struct RelationSpace {
    unsigned genus = 0;
    unsigned degree = 0;
    std::vector<CgMonomial> basis;
    std::vector<Relation> rows;              // rank-increasing generators
    std::vector<std::vector<Rational>> rref; // row-reduced form of the span
    bool budget_exhausted = false;           // still growing when budget hit

    std::size_t rank() const { return rref.size(); }
    // Residual of v after reduction; empty optional if v lies in the span.
    std::optional<std::vector<Rational>> reduce(std::vector<Rational> v) const;
    bool contains(const std::vector<Rational>& v) const;

    std::string to_json() const;
};

// Drives faber_monomials over j = g, g+1, ... and all family members until
// the row space stops growing or j exceeds g + budget.
RelationSpace relation_space(unsigned g, unsigned i, unsigned budget = 4);

// Gauss-Jordan reduced echelon form; returns the rank.
std::size_t rref_in_place(std::vector<std::vector<Rational>>& m);

} // namespace tautring
