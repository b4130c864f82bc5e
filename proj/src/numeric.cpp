#include "tautring/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace tautring {

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer double_factorial(long k) {
    if (k < -1) throw std::invalid_argument("double_factorial: k must be >= -1");
    if (k <= 0) return 1;
    Integer f;
    mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational bernoulli(unsigned n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("bernoulli: index must be even and >= 2");
    // sum_{j=0}^{n} C(n+1, j) B_j = 0, with B_0 = 1, B_1 = -1/2.
    static std::vector<Rational> memo{Rational(1), Rational(-1, 2)};
    while (memo.size() <= n) {
        unsigned m = static_cast<unsigned>(memo.size());
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * memo[j];
        Rational b = -acc / Rational(binomial(m + 1, m));
        b.canonicalize();
        memo.push_back(b);
    }
    return memo[n];
}

} // namespace tautring
