#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

/// Exponent vector m = (m_1, m_2, ...) of a kappa-monomial
/// kappa_1^{m_1} kappa_2^{m_2} ...; trailing zeros are stripped, so two
/// indices compare equal iff they denote the same monomial.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents);

    // m_i for the part i (1-based); 0 beyond the stored prefix.
    unsigned operator[](std::size_t part) const;
    std::size_t parts() const { return e_.size(); }
    bool is_zero() const { return e_.empty(); }

    // |m| = sum i*m_i
    unsigned degree() const;
    // ||m|| = sum m_i
    unsigned weight() const;
    // m! = prod m_i!
    Integer index_factorial() const;

    MultiIndex operator+(const MultiIndex& o) const;
    // Requires o <= *this coordinatewise.
    MultiIndex operator-(const MultiIndex& o) const;
    bool contains(const MultiIndex& o) const;  // o <= *this coordinatewise

    // Single kappa_i, exponent 1.
    static MultiIndex unit(unsigned part);

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    // Arbitrary total order for map keys (lex on the trimmed vector).
    std::strong_ordering operator<=>(const MultiIndex& o) const;

    // Canonical text form: comma-separated exponents, "0" for the empty index.
    std::string encode() const;
    static MultiIndex decode(const std::string& text);

    // Human-readable monomial, e.g. "k1^2*k3"; "1" for the empty index.
    std::string label() const;

    const std::vector<unsigned>& exponents() const { return e_; }

private:
    std::vector<unsigned> e_;
};

// <_kappa: degree ascending, ties by lex comparison of exponent vectors.
bool kappa_less(const MultiIndex& a, const MultiIndex& b);

// Enumerates all coordinatewise splittings m = m' + m''.
void for_each_split(const MultiIndex& m,
                    const std::function<void(const MultiIndex&, const MultiIndex&)>& fn);

} // namespace tautring
