// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Set TAUTRING_EXTENDED=1 to also run the long, non-gating
// reproductions (genus 21..27 ranks including the middle-degree anomalies).
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <vector>

#include "tautring/chern.hpp"
#include "tautring/gorenstein.hpp"
#include "tautring/kernel_stats.hpp"
#include "tautring/liu_xu.hpp"
#include "tautring/pairing_matrix.hpp"
#include "tautring/rank.hpp"
#include "tautring/relations.hpp"

using namespace tautring;

namespace {

// Published ranks of Q_{g,i}, rows indexed by genus starting at 2.
const std::map<unsigned, std::vector<std::size_t>> kExpectedRanks = {
    {2, {1, 1}},
    {3, {1, 2, 1}},
    {4, {1, 2, 2, 1}},
    {5, {1, 2, 3, 2, 1}},
    {6, {1, 2, 4, 4, 2, 1}},
    {7, {1, 2, 4, 5, 4, 2, 1}},
    {8, {1, 2, 4, 6, 6, 4, 2, 1}},
    {9, {1, 2, 4, 7, 9, 7, 4, 2, 1}},
    {10, {1, 2, 4, 7, 10, 10, 7, 4, 2, 1}},
    {11, {1, 2, 4, 7, 11, 13, 11, 7, 4, 2, 1}},
    {12, {1, 2, 4, 7, 12, 16, 16, 12, 7, 4, 2, 1}},
    {13, {1, 2, 4, 7, 12, 17, 20, 17, 12, 7, 4, 2, 1}},
    {14, {1, 2, 4, 7, 12, 18, 24, 24, 18, 12, 7, 4, 2, 1}},
    {15, {1, 2, 4, 7, 12, 19, 27, 31, 27, 19, 12, 7, 4, 2, 1}},
    {16, {1, 2, 4, 7, 12, 19, 28, 35, 35, 28, 19, 12, 7, 4, 2, 1}},
    {17, {1, 2, 4, 7, 12, 19, 29, 39, 45, 39, 29, 19, 12, 7, 4, 2, 1}},
    {18, {1, 2, 4, 7, 12, 19, 30, 42, 53, 53, 42, 30, 19, 12, 7, 4, 2, 1}},
    {19, {1, 2, 4, 7, 12, 19, 30, 43, 57, 64, 57, 43, 30, 19, 12, 7, 4, 2, 1}},
    {20, {1, 2, 4, 7, 12, 19, 30, 44, 61, 75, 75, 61, 44, 30, 19, 12, 7, 4, 2, 1}},
    {21, {1, 2, 4, 7, 12, 19, 30, 45, 64, 83, 94, 83, 64, 45, 30, 19, 12, 7, 4, 2, 1}},
    {22, {1, 2, 4, 7, 12, 19, 30, 45, 65, 87, 106, 106, 87, 65, 45, 30, 19, 12, 7, 4, 2, 1}},
    {23, {1, 2, 4, 7, 12, 19, 30, 45, 66, 91, 117, 131, 117, 91, 66, 45, 30, 19, 12, 7, 4, 2, 1}},
    {24,
     {1, 2, 4, 7, 12, 19, 30, 45, 67, 94, 125, 150, 150, 125, 94, 67, 45, 30, 19, 12, 7, 4, 2, 1}},
    {25, {1,  2,  4,   7,   12,  19,  30, 45, 67, 95, 129, 162, 181,
          162, 129, 95,  67,  45,  30, 19, 12, 7,  4,   2,   1}},
    {26, {1,   2,   4,   7,  12, 19, 30, 45, 67, 96, 133, 173, 208,
          208, 173, 133, 96, 67, 45, 30, 19, 12, 7,  4,   2,   1}},
    {27, {1,   2,   4,   7,   12, 19, 30, 45, 67, 97, 136, 181, 227, 253,
          227, 181, 136, 97,  67, 45, 30, 19, 12, 7,  4,   2,   1}},
};

bool g_all_pass = true;

void report(int n, const std::string& what, bool ok, double seconds) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " ["
              << seconds << "s]" << std::endl;
    g_all_pass = g_all_pass && ok;
}

void run(int n, const std::string& what, const std::function<bool()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::cerr << "criterion " << n << " threw: " << e.what() << std::endl;
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(n, what, ok, dt);
}

bool check_rank_band(LiuXuTable& table, unsigned g_lo, unsigned g_hi,
                     std::size_t exact_limit = 400) {
    bool ok = true;
    for (unsigned g = g_lo; g <= g_hi; ++g) {
        const auto& want = kExpectedRanks.at(g);
        for (unsigned i = 0; i + 1 <= g; ++i) {
            auto q = build_q_matrix(table, g, i);
            std::size_t rank = exact_rank(q.entries, exact_limit);
            if (rank != want[i]) {
                std::cerr << "  rank Q_{" << g << "," << i << "} = " << rank << ", expected "
                          << want[i] << std::endl;
                ok = false;
            }
        }
    }
    return ok;
}

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned left, unsigned maxp) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n ? n : 1);
    if (n == 0) out.push_back({});
    return out;
}

std::vector<Rational> coeff_vec(unsigned i,
                                const std::vector<std::pair<std::string, Rational>>& terms) {
    auto basis = enumerate_cg_monomials(i);
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [label, c] : terms)
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k].label() == label) v[k] = c;
    return v;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) return false;
    Rational ratio = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if ((a[k] == 0) != (b[k] == 0)) return false;
        if (a[k] == 0) continue;
        Rational r = a[k] / b[k];
        r.canonicalize();
        if (ratio == 0)
            ratio = r;
        else if (r != ratio)
            return false;
    }
    return ratio != 0;
}

TautMonomial random_monomial(std::mt19937& rng, int n, unsigned max_degree) {
    TautMonomial m = TautMonomial::unit(n);
    unsigned budget = rng() % (max_degree + 1);
    while (budget > 0) {
        switch (rng() % 3) {
            case 0: {
                m.k_exp[rng() % n] += 1;
                budget -= 1;
                break;
            }
            case 1: {
                if (n < 2) break;
                int i = 1 + static_cast<int>(rng() % n);
                int j = 1 + static_cast<int>(rng() % n);
                if (i == j) break;
                m.diagonals.emplace_back(std::min(i, j), std::max(i, j));
                budget -= 1;
                break;
            }
            default: {
                unsigned part = 1 + rng() % std::min(budget, 3u);
                m.kappa = m.kappa + MultiIndex::unit(part);
                budget -= part;
                break;
            }
        }
    }
    m.canonicalize();
    return m;
}

} // namespace

int main() {
    LiuXuTable table;
    const bool extended = []() {
        const char* e = std::getenv("TAUTRING_EXTENDED");
        return e && std::string(e) == "1";
    }();

    run(1, "pairing ranks match the published table for g = 2..12", [&] {
        return check_rank_band(table, 2, 12);
    });

    run(2, "pairing ranks match the published table for g = 13..20", [&] {
        bool ok = check_rank_band(table, 13, 20);
        if (extended) {
            // the large band relies on the multi-prime modular backend;
            // Bareiss confirmation is capped to keep the runtime sane
            ok = check_rank_band(table, 21, 27, 100) && ok;
            auto anomaly_n = [&](unsigned g, unsigned k) {
                auto q = build_q_matrix(table, g, k);
                std::size_t monomials = 0;
                for (unsigned r = 0; r <= k; ++r) monomials += partition_count(r);
                return monomials - exact_rank(q.entries, 100);
            };
            std::size_t n25 = anomaly_n(25, 12), n27 = anomaly_n(27, 13);
            if (n25 != 91 || n27 != 120) {
                std::cerr << "  middle-degree anomalies: n(25,12) = " << n25
                          << " (want 91), n(27,13) = " << n27 << " (want 120)" << std::endl;
                ok = false;
            }
        }
        return ok;
    });

    run(3, "worked-example constants are exact", [&] {
        MultiIndex m1 = MultiIndex::decode("1"), m2 = MultiIndex::decode("2");
        return table.beta(m1) == Rational(1, 3) && table.beta(m2) == Rational(7, 90) &&
               table.gamma(m1) == Rational(-1, 3) && table.c_constant(m1) == Rational(2, 3) &&
               table.c_constant(m2) == Rational(4, 45) && table.f_constant(4, m1) == 2 &&
               table.f_constant(4, m2) == Rational(32, 15) &&
               table.r_value(4, m2) == Rational(32, 3);
    });

    run(4, "symmetric-sum identity holds for every partition, g = 2..8", [&] {
        for (unsigned g = 2; g <= 8; ++g)
            for (const auto& dbar : partitions_of(g - 2))
                if (!sk_sum_check(table, g, dbar)) return false;
        return true;
    });

    run(5, "kernel statistics a(l) and b(l) match the published tables", [&] {
        bool ok = true;
        for (unsigned l = 0; l <= 9; ++l) {
            unsigned k = l + 3, g = 2 * l + 8;  // smallest genus with 2k <= g-2
            std::size_t a = kernel_dimension_mg(table, g, k);
            if (a != kATable[l]) {
                std::cerr << "  a(" << l << ") via P_{" << g << "," << k << "} = " << a
                          << ", expected " << kATable[l] << std::endl;
                ok = false;
            }
        }
        const std::size_t want_b[] = {1, 2, 3, 6, 10, 14, 22, 33, 45, 64};
        for (unsigned l = 0; l <= 9; ++l) ok = ok && b_function(l) == want_b[l];
        for (unsigned l = 0; l <= 11; ++l) ok = ok && b_function(l) == b_function_recursive(l);
        return ok;
    });

    run(6, "generated relations reproduce the published ones", [&] {
        bool ok = true;
        auto s2 = relation_space(2, 1);
        ok = ok && s2.rank() == 1 && s2.contains(coeff_vec(1, {{"k1", Rational(5, 3)}}));

        auto s3 = relation_space(3, 2);
        std::vector<std::vector<std::pair<std::string, Rational>>> g3 = {
            {{"K^2", 42}, {"K*k1", Rational(-21, 2)}, {"k1^2", Rational(7, 48)}},
            {{"K^2", 126}, {"K*k1", Rational(-63, 2)}, {"k1^2", Rational(41, 48)}, {"k2", -6}},
            {{"K^2", 56}, {"K*k1", -14}, {"k1^2", Rational(47, 12)}, {"k2", -20}},
        };
        ok = ok && s3.rank() == 3;
        for (const auto& rel : g3) ok = ok && s3.contains(coeff_vec(2, rel));
        ok = ok && !s3.rows.empty() && proportional(s3.rows[0].coeffs, coeff_vec(2, g3[0]));
        ok = ok && s3.contains(coeff_vec(2, {{"k1^2", 1}}));
        ok = ok && s3.contains(coeff_vec(2, {{"k2", 1}}));
        ok = ok && s3.contains(coeff_vec(2, {{"K*k1", 1}, {"K^2", -4}}));

        auto s4 = relation_space(4, 2);
        std::vector<std::vector<std::pair<std::string, Rational>>> g4 = {
            {{"K^2", 420}, {"K*k1", -70}, {"k1^2", Rational(115, 6)}, {"k2", -150}},
            {{"K^2", 120}, {"K*k1", -20}, {"k1^2", Rational(10, 3)}, {"k2", -20}},
        };
        ok = ok && s4.rank() == 2;
        for (const auto& rel : g4) ok = ok && s4.contains(coeff_vec(2, rel));
        ok = ok && s4.contains(coeff_vec(2, {{"k1^2", 1}, {"k2", Rational(-32, 3)}}));
        ok = ok &&
             s4.contains(coeff_vec(2, {{"K*k1", 1}, {"K^2", -6}, {"k2", Rational(-7, 9)}}));
        return ok;
    });

    run(7, "graded ring is Gorenstein for g = 2..5", [&] {
        for (unsigned g = 2; g <= 5; ++g) {
            auto r = gorenstein_check(table, g);
            if (r.verdict != GorensteinReport::Verdict::Gorenstein) {
                std::cerr << "  g = " << g << ": " << r.verdict_name() << std::endl;
                return false;
            }
        }
        if (extended) {
            for (unsigned g = 6; g <= 7; ++g) {
                auto r = gorenstein_check(table, g);
                if (r.verdict != GorensteinReport::Verdict::Gorenstein) {
                    std::cerr << "  g = " << g << ": " << r.verdict_name() << std::endl;
                    return false;
                }
            }
        }
        return true;
    });

    run(8, "block assembly matches the pushforward oracle; transposes agree", [&] {
        for (unsigned g = 2; g <= 8; ++g)
            for (unsigned i = 0; i + 1 <= g; ++i)
                if (!build_q_matrix(table, g, i).same_entries(build_q_matrix_direct(table, g, i)))
                    return false;
        for (unsigned g = 2; g <= 10; ++g) {
            for (unsigned i = 0; i + 1 <= g; ++i)
                if (!build_q_matrix(table, g, i).same_entries(
                        build_q_matrix(table, g, g - 1 - i).transpose()))
                    return false;
            for (unsigned i = 0; i + 2 <= g; ++i)
                if (!build_p_matrix(table, g, i).same_entries(
                        build_p_matrix(table, g, g - 2 - i).transpose()))
                    return false;
        }
        return true;
    });

    run(9, "rewriting, projection, degree and rank invariants hold", [&] {
        std::mt19937 rng(2026);
        // confluence under randomized rule order
        for (int t = 0; t < 500; ++t) {
            int n = 2 + static_cast<int>(rng() % 5);
            auto m = random_monomial(rng, n, 6);
            if (normalize(m) != normalize(m, [&](std::size_t k) { return rng() % k; }))
                return false;
        }
        // projection formula
        for (int t = 0; t < 500; ++t) {
            int n = 2 + static_cast<int>(rng() % 4);
            auto a = random_monomial(rng, n - 1, 4);
            auto b = random_monomial(rng, n, 4);
            auto lhs = pushforward(TautExpression::of(a.pulled_back_to(n)) *
                                       TautExpression::of(b), 4);
            auto rhs = TautExpression::of(a) * pushforward(TautExpression::of(b), 4);
            if (normalize(lhs) != normalize(rhs)) return false;
        }
        // degree bookkeeping under pushforward
        for (int t = 0; t < 200; ++t) {
            int n = 2 + static_cast<int>(rng() % 4);
            auto m = random_monomial(rng, n, 5);
            auto down = pushforward(TautExpression::of(m), 4);
            for (const auto& [mm, c] : down.terms()) {
                (void)c;
                if (mm.degree() + 1 != m.degree()) return false;
            }
        }
        // full-rank regime: Q_{g,i} has full row rank for i < g/3
        for (unsigned g = 2; g <= 15; ++g)
            for (unsigned i = 0; 3 * i < g; ++i) {
                auto q = build_q_matrix(table, g, i);
                if (exact_rank(q.entries) != q.rows()) return false;
            }
        // modular and exact backends agree on every matrix small enough
        for (unsigned g = 2; g <= 9; ++g)
            for (unsigned i = 0; i + 1 <= g; ++i) {
                auto q = build_q_matrix(table, g, i);
                if (q.rows() <= 400 && exact_rank(q.entries) != bareiss_rank(q.entries))
                    return false;
            }
        return true;
    });

    std::cout << (g_all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
    return g_all_pass ? 0 : 1;
}
