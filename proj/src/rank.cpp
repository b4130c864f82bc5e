#include "tautring/rank.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace tautring {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 reduce_rational(const Rational& q, u64 p) {
    u64 num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    u64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) throw std::domain_error("modular_rank: denominator divisible by prime");
    return mulmod(num, powmod(den, p - 2, p), p);  // p prime
}

} // namespace

std::size_t modular_rank(const std::vector<std::vector<Rational>>& m, u64 p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<u64>> a(rows, std::vector<u64>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = reduce_rational(m[r][c], p);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        u64 inv = powmod(a[rank][c], p - 2, p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            u64 f = mulmod(a[r][c], inv, p);
            for (std::size_t k = c; k < cols; ++k) {
                u64 sub = mulmod(f, a[rank][k], p);
                a[r][k] = (a[r][k] >= sub) ? a[r][k] - sub : a[r][k] + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            Integer t;
            mpz_lcm(t.get_mpz_t(), lcm.get_mpz_t(), m[r][c].get_den().get_mpz_t());
            lcm = t;
        }
        for (std::size_t c = 0; c < cols; ++c) {
            Rational v = m[r][c] * Rational(lcm);
            v.canonicalize();
            a[r][c] = v.get_num();
        }
    }

    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                Integer num = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
                mpz_divexact(a[r][k].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& m, std::size_t exact_limit) {
    std::size_t best = 0;
    bool any = false;
    for (u64 p : kRankPrimes) {
        try {
            best = std::max(best, modular_rank(m, p));
            any = true;
        } catch (const std::domain_error&) {
            // prime divides a denominator; skip it
        }
    }
    if (!any) return bareiss_rank(m);
    if (m.size() <= exact_limit) {
        std::size_t exact = bareiss_rank(m);
        if (exact != best) throw std::logic_error("exact_rank: modular and Bareiss ranks disagree");
    }
    return best;
}

RankReport rank_report(const PairingMatrix& m, std::size_t exact_limit) {
    RankReport rep;
    rep.genus = m.genus;
    rep.degree = m.degree;
    rep.rows = m.rows();
    rep.cols = m.cols();
    rep.rank = exact_rank(m.entries, exact_limit);
    rep.backend = m.rows() <= exact_limit ? "modular+bareiss" : "modular";
    rep.primes.assign(kRankPrimes.begin(), kRankPrimes.end());
    return rep;
}

std::string RankReport::to_json() const {
    nlohmann::json j;
    j["genus"] = genus;
    j["degree"] = degree;
    j["rows"] = rows;
    j["cols"] = cols;
    j["rank"] = rank;
    j["backend"] = backend;
    j["primes"] = primes;
    return j.dump();
}

} // namespace tautring
