#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tautring/chern.hpp"
#include "tautring/taut_expression.hpp"

using namespace tautring;

namespace {

TautExpression expr(TautMonomial m) { return TautExpression::of(std::move(m)); }

// Random monomial on C_g^n of bounded degree, possibly with kappa factors.
TautMonomial random_monomial(std::mt19937& rng, int n, unsigned max_degree) {
    TautMonomial m = TautMonomial::unit(n);
    unsigned budget = rng() % (max_degree + 1);
    while (budget > 0) {
        switch (rng() % 3) {
            case 0: {
                int i = 1 + static_cast<int>(rng() % n);
                m.k_exp[static_cast<std::size_t>(i) - 1] += 1;
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

TEST_CASE("diagonal self-intersection rewrites to -K") {
    // D_{1,2}^2 = -K_1 D_{1,2} on two points
    auto sq = TautMonomial::D(2, 1, 2) * TautMonomial::D(2, 1, 2);
    auto got = normalize(sq);
    auto want = expr(TautMonomial::K(2, 1) * TautMonomial::D(2, 1, 2)) * Rational(-1);
    CHECK(got == want);
}

TEST_CASE("distinct diagonals meeting the top point merge") {
    // D_{1,3} D_{2,3} = D_{1,2} D_{1,3}
    auto prod = TautMonomial::D(3, 1, 3) * TautMonomial::D(3, 2, 3);
    auto got = normalize(prod);
    auto want = expr(TautMonomial::D(3, 1, 2) * TautMonomial::D(3, 1, 3));
    CHECK(got == want);
}

TEST_CASE("K at the top point slides along a diagonal") {
    // K_3 D_{1,3} = K_1 D_{1,3}
    auto prod = TautMonomial::K(3, 3) * TautMonomial::D(3, 1, 3);
    auto got = normalize(prod);
    auto want = expr(TautMonomial::K(3, 1) * TautMonomial::D(3, 1, 3));
    CHECK(got == want);
}

TEST_CASE("pushforward of the basic classes") {
    unsigned g = 3;
    // pi_*(K_n^k) = kappa_{k-1}; kappa_0 = 2g-2
    CHECK(pushforward(expr(TautMonomial::K(1, 1)), g) ==
          TautExpression::unit(0) * Rational(2 * g - 2));
    CHECK(pushforward(expr(TautMonomial::K(1, 1, 3)), g) ==
          expr(TautMonomial::kappa_class(0, MultiIndex::unit(2))));
    // pi_*(M D_{i,n}) = M
    CHECK(pushforward(expr(TautMonomial::K(2, 1) * TautMonomial::D(2, 1, 2)), g) ==
          expr(TautMonomial::K(1, 1)));
    // pure pullbacks die
    CHECK(pushforward(expr(TautMonomial::K(2, 1)), g).is_zero());
    CHECK(pushforward(TautExpression::unit(1), g).is_zero());
}

TEST_CASE("pushforward drops the degree by one on nonzero images") {
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto m = random_monomial(rng, n, 5);
        auto down = pushforward(expr(m), 4);
        for (const auto& [mm, c] : down.terms()) {
            CHECK(mm.degree() + 1 == m.degree());
            (void)c;
        }
    }
}

TEST_CASE("normalization is confluent under random rewrite orders") {
    std::mt19937 rng(17);
    int checked = 0;
    while (checked < 500) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto m = random_monomial(rng, n, 6);
        auto reference = normalize(m);
        auto shuffled = normalize(m, [&](std::size_t k) { return rng() % k; });
        CHECK(reference == shuffled);
        // pushforwards computed from either order agree as well
        CHECK(pushforward(TautExpression::of(m), 5) == pushforward(shuffled, 5));
        ++checked;
    }
}

TEST_CASE("projection formula pi_*(pi^*(A) B) = A pi_*(B)") {
    std::mt19937 rng(23);
    unsigned g = 4;
    int checked = 0;
    while (checked < 500) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto a = random_monomial(rng, n - 1, 4);
        auto b = random_monomial(rng, n, 4);
        auto lhs = pushforward(expr(a.pulled_back_to(n)) * expr(b), g);
        auto rhs = expr(a) * pushforward(expr(b), g);
        CHECK(normalize(lhs) == normalize(rhs));
        ++checked;
    }
}

TEST_CASE("chern classes of the jet bundle") {
    CHECK(chern_f(3, 0) == TautExpression::unit(3));
    CHECK(chern_f(1, 1) == expr(TautMonomial::K(1, 1)));
    CHECK(chern_f(1, 2).is_zero());
    CHECK(chern_f(2, 3).is_zero());  // c_k vanishes above the rank

    auto c21 = chern_f(2, 1);
    auto want = expr(TautMonomial::K(2, 1)) + expr(TautMonomial::K(2, 2)) -
                expr(TautMonomial::D(2, 1, 2));
    CHECK(c21 == want);

    // recursion against direct expansion of (1+K_1)(1+K_2-Delta_2)(1+K_3-Delta_3)
    TautExpression prod = TautExpression::unit(3) + expr(TautMonomial::K(3, 1));
    for (int m = 2; m <= 3; ++m) {
        TautExpression factor = TautExpression::unit(3) + expr(TautMonomial::K(3, m)) - delta_sum(3, m);
        prod = prod * factor;
    }
    for (int k = 0; k <= 3; ++k) {
        TautExpression part(3);
        for (const auto& [m, c] : prod.terms())
            if (m.degree() == static_cast<unsigned>(k)) part.add_term(m, c);
        CHECK(chern_f(3, k) == part);
    }
}

TEST_CASE("lambda classes as kappa polynomials") {
    auto l1 = lambda_polynomial(1);
    REQUIRE(l1.size() == 1);
    CHECK(l1.at(MultiIndex::unit(1)) == Rational(1, 12));

    auto l2 = lambda_polynomial(2);
    REQUIRE(l2.size() == 1);
    CHECK(l2.at(MultiIndex({2})) == Rational(1, 288));

    // lambda_3 = kappa_1^3/10368 - kappa_3/360
    auto l3 = lambda_polynomial(3);
    CHECK(l3.at(MultiIndex({3})) == Rational(1, 10368));
    CHECK(l3.at(MultiIndex::unit(3)) == Rational(-1, 360));
}

TEST_CASE("lambda substitution") {
    unsigned g = 5;
    auto e = expr(TautMonomial::lambda_class(1, 2));
    auto s = lambda_to_kappa(e, g);
    auto want = expr(TautMonomial::kappa_class(1, MultiIndex({2}))) * Rational(1, 288);
    CHECK(s == want);
    // lambda_i vanishes above the genus
    CHECK(lambda_to_kappa(expr(TautMonomial::lambda_class(1, 6)), 5).is_zero());
}

TEST_CASE("chern classes of the twisted bundle") {
    unsigned g = 3;
    auto got = chern_fe(1, 1, g);
    auto want = expr(TautMonomial::K(1, 1)) - expr(TautMonomial::lambda_class(1, 1));
    CHECK(got == want);
    CHECK(chern_fe(2, 0, g) == TautExpression::unit(2));
}
