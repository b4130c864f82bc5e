#include "tautring/chern.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "tautring/numeric.hpp"

namespace tautring {

TautExpression chern_f(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("chern_f: need n >= 1, k >= 0");
    if (k == 0) return TautExpression::unit(n);
    if (k > n) return TautExpression::zero(n);
    if (n == 1) return TautExpression::of(TautMonomial::K(1, 1));  // c_1(F_1) = K_1
    TautExpression head = chern_f(n - 1, k).pulled_back_to(n);
    TautExpression edge = TautExpression::of(TautMonomial::K(n, n)) - delta_sum(n, n);
    return head + edge * chern_f(n - 1, k - 1).pulled_back_to(n);
}

TautExpression chern_fe(int n, int k, unsigned g) {
    TautExpression acc(n);
    for (int i = 0; i <= k && i <= static_cast<int>(g); ++i) {
        Rational sign = (i % 2 == 0) ? 1 : -1;
        acc += TautExpression::of(TautMonomial::lambda_class(n, static_cast<unsigned>(i)), sign) *
               chern_f(n, k - i);
    }
    return acc;
}

namespace {

using KappaPoly = std::map<MultiIndex, Rational>;

KappaPoly poly_mul(const KappaPoly& a, const KappaPoly& b) {
    KappaPoly r;
    for (const auto& [m1, c1] : a)
        for (const auto& [m2, c2] : b) {
            Rational& slot = r[m1 + m2];
            slot += c1 * c2;
            if (slot == 0) r.erase(m1 + m2);
        }
    return r;
}

// lambda_d via d*lambda_d = sum_j j a_j lambda_{d-j} with a_j the exponent
// series coefficient (nonzero only for odd j = 2i-1).
const KappaPoly& lambda_memo(unsigned i) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    static std::deque<KappaPoly> lam{KappaPoly{{MultiIndex{}, Rational(1)}}};
    while (lam.size() <= i) {
        unsigned d = static_cast<unsigned>(lam.size());
        KappaPoly acc;
        for (unsigned j = 1; j <= d; j += 2) {
            unsigned two_i = j + 1;  // j = 2i-1
            Rational a = bernoulli(two_i) / Rational(Integer(two_i) * Integer(two_i - 1));
            KappaPoly term{{MultiIndex::unit(j), a * Rational(j)}};
            for (const auto& [m, c] : poly_mul(term, lam[d - j])) {
                Rational& slot = acc[m];
                slot += c;
            }
        }
        KappaPoly out;
        for (auto& [m, c] : acc) {
            Rational v = c / Rational(d);
            v.canonicalize();
            if (v != 0) out.emplace(m, v);
        }
        lam.push_back(std::move(out));
    }
    return lam[i];
}

} // namespace

KappaPoly lambda_polynomial(unsigned i) { return lambda_memo(i); }

TautExpression lambda_to_kappa(const TautExpression& e, unsigned g) {
    TautExpression result(e.points());
    for (const auto& [m, c] : e.terms()) {
        const auto& lexp = m.lambda.exponents();
        bool vanishes = false;
        KappaPoly prod{{MultiIndex{}, Rational(1)}};
        for (std::size_t i = 0; i < lexp.size() && !vanishes; ++i) {
            if (!lexp[i]) continue;
            if (i + 1 > g) {
                vanishes = true;  // lambda_i = 0 above the Hodge rank
                break;
            }
            for (unsigned rep = 0; rep < lexp[i]; ++rep)
                prod = poly_mul(prod, lambda_memo(static_cast<unsigned>(i + 1)));
        }
        if (vanishes) continue;
        for (const auto& [mi, pc] : prod) {
            TautMonomial t = m;
            t.lambda = MultiIndex{};
            t.kappa = t.kappa + mi;
            result.add_term(std::move(t), c * pc);
        }
    }
    return result;
}

} // namespace tautring
