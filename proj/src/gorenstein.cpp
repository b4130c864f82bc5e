#include "tautring/gorenstein.hpp"

#include <stdexcept>

#include <json.hpp>

#include "tautring/rank.hpp"

namespace tautring {

std::vector<std::size_t> GorensteinReport::dimensions() const {
    std::vector<std::size_t> d;
    for (const auto& b : degrees) d.push_back(b.lower);
    return d;
}

std::string GorensteinReport::verdict_name() const {
    return verdict == Verdict::Gorenstein ? "GORENSTEIN" : "UNDETERMINED";
}

std::string GorensteinReport::to_json() const {
    nlohmann::json j;
    j["genus"] = genus;
    j["verdict"] = verdict_name();
    nlohmann::json degs = nlohmann::json::array();
    for (const auto& b : degrees) {
        degs.push_back({{"degree", b.degree},
                        {"monomials", b.monomials},
                        {"lower", b.lower},
                        {"upper", b.upper},
                        {"matched", b.matched}});
    }
    j["degrees"] = std::move(degs);
    return j.dump();
}

GorensteinReport gorenstein_check(LiuXuTable& table, unsigned g, unsigned budget) {
    if (g < 2) throw std::invalid_argument("gorenstein_check: genus must be >= 2");
    GorensteinReport report;
    report.genus = g;
    bool all_matched = true;
    for (unsigned i = 0; i <= g - 1; ++i) {
        DegreeBounds b;
        b.degree = i;
        for (unsigned r = 0; r <= i; ++r) b.monomials += partition_count(r);
        PairingMatrix q = build_q_matrix(table, g, i);
        b.lower = exact_rank(q.entries);
        RelationSpace rels = relation_space(g, i, budget);
        if (b.monomials < rels.rank())
            throw std::logic_error("gorenstein_check: relation rank exceeds monomial count");
        b.upper = b.monomials - rels.rank();
        if (b.upper < b.lower)
            throw std::logic_error("gorenstein_check: generated relations contradict pairing rank");
        b.matched = (b.upper == b.lower);
        all_matched = all_matched && b.matched;
        report.degrees.push_back(b);
    }
    // Top degree must come out one-dimensional; above it the ring is empty.
    if (report.degrees.back().lower != 1 || report.degrees.back().upper != 1)
        all_matched = false;
    report.verdict =
        all_matched ? GorensteinReport::Verdict::Gorenstein : GorensteinReport::Verdict::Undetermined;
    return report;
}

} // namespace tautring
