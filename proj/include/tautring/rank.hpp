#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tautring/pairing_matrix.hpp"

namespace tautring {

// Fixed word-size primes used by the modular backend; constants, not
// per-run randomness, so reported ranks are reproducible.
inline constexpr std::array<std::uint64_t, 5> kRankPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL};

struct RankReport {
    unsigned genus = 0;
    unsigned degree = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::string backend;
    std::vector<std::uint64_t> primes;

    std::string to_json() const;
};

// Rank of the matrix reduced mod p; throws if a denominator is divisible
// by p (callers fall back to another prime).
std::size_t modular_rank(const std::vector<std::vector<Rational>>& m, std::uint64_t p);

// Exact rank over Q by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& m);

// Primary backend: maximum rank over the fixed primes; matrices with at
// most `exact_limit` rows are confirmed with the Bareiss backend (throws
// on disagreement).
std::size_t exact_rank(const std::vector<std::vector<Rational>>& m,
                       std::size_t exact_limit = 400);

RankReport rank_report(const PairingMatrix& m, std::size_t exact_limit = 400);

} // namespace tautring
