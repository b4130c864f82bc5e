#pragma once

#include <string>
#include <vector>

#include "tautring/liu_xu.hpp"
#include "tautring/relations.hpp"

namespace tautring {

struct DegreeBounds {
    unsigned degree = 0;
    std::size_t monomials = 0;
    std::size_t lower = 0;   // rank of Q_{g,i}
    std::size_t upper = 0;   // monomials - rank of the relation space
    bool matched = false;
};

/// Per-degree lower/upper dimension bounds and the overall verdict.
/// UNDETERMINED is returned when the bounds fail to meet within budget;
/// a failed search never claims non-Gorenstein.
struct GorensteinReport {
    enum class Verdict { Gorenstein, Undetermined };

    unsigned genus = 0;
    std::vector<DegreeBounds> degrees;
    Verdict verdict = Verdict::Undetermined;

    std::vector<std::size_t> dimensions() const;  // matched dims, per degree
    std::string verdict_name() const;
    std::string to_json() const;
};

GorensteinReport gorenstein_check(LiuXuTable& table, unsigned g, unsigned budget = 4);

} // namespace tautring
