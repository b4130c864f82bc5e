#include "tautring/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace tautring {

namespace {

// Partitions of d with all parts <= max_part, generated by largest part first.
void gen_partitions(unsigned d, unsigned max_part, std::vector<unsigned>& mult,
                    std::vector<MultiIndex>& out) {
    if (d == 0) {
        out.emplace_back(mult);
        return;
    }
    for (unsigned part = std::min(d, max_part); part >= 1; --part) {
        ++mult[part - 1];
        gen_partitions(d - part, part, mult, out);
        --mult[part - 1];
    }
}

} // namespace

std::vector<MultiIndex> enumerate_kappa_monomials(unsigned d) {
    std::vector<MultiIndex> out;
    std::vector<unsigned> mult(std::max(1u, d), 0);
    gen_partitions(d, d, mult, out);
    std::sort(out.begin(), out.end(), kappa_less);
    return out;
}

unsigned long partition_count(unsigned d) {
    // Euler recurrence with generalized pentagonal numbers.
    static std::vector<unsigned long> memo{1};
    while (memo.size() <= d) {
        unsigned n = static_cast<unsigned>(memo.size());
        long acc = 0;
        for (unsigned k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
            if (g1 > static_cast<long>(n)) break;
            long sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * static_cast<long>(memo[n - g1]);
            if (g2 <= static_cast<long>(n)) acc += sign * static_cast<long>(memo[n - g2]);
        }
        memo.push_back(static_cast<unsigned long>(acc));
    }
    return memo[d];
}

std::string CgMonomial::label() const {
    if (k_power == 0) return kappa.label();
    std::ostringstream os;
    os << 'K';
    if (k_power > 1) os << '^' << k_power;
    if (!kappa.is_zero()) os << '*' << kappa.label();
    return os.str();
}

bool star_less(const CgMonomial& a, const CgMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.k_power != b.k_power) return a.k_power < b.k_power;
    return kappa_less(a.kappa, b.kappa);
}

std::vector<CgMonomial> enumerate_cg_monomials(unsigned d) {
    std::vector<CgMonomial> out;
    for (unsigned j = 0; j <= d; ++j) {
        for (const auto& m : enumerate_kappa_monomials(d - j)) {
            out.push_back(CgMonomial{j, m});
        }
    }
    std::sort(out.begin(), out.end(), star_less);
    return out;
}

} // namespace tautring
