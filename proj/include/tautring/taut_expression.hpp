#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tautring/multi_index.hpp"
#include "tautring/rational.hpp"

namespace tautring {

/// A monomial on C_g^n in the classes K_i, D_{i,j}, pulled-back kappa_m and
/// lambda-classes.  Point indices are 1-based; diagonals are stored as sorted
/// (i,j) pairs with i < j, repeated entries encoding multiplicity.
struct TautMonomial {
    int points = 0;
    std::vector<unsigned> k_exp;                       // size == points
    std::vector<std::pair<int, int>> diagonals;        // sorted, i < j
    MultiIndex kappa;
    MultiIndex lambda;

    static TautMonomial unit(int n);
    static TautMonomial K(int n, int i, unsigned power = 1);
    static TautMonomial D(int n, int i, int j);
    static TautMonomial kappa_class(int n, MultiIndex m);
    static TautMonomial lambda_class(int n, unsigned i);

    unsigned k_power(int i) const { return k_exp[static_cast<std::size_t>(i) - 1]; }
    unsigned degree() const;
    TautMonomial operator*(const TautMonomial& o) const;

    // Reinterpret on a larger fiber power (pullback along point-forgetting).
    TautMonomial pulled_back_to(int n) const;
    bool involves_point(int i) const;

    std::string label() const;

    bool operator==(const TautMonomial& o) const = default;
    auto operator<=>(const TautMonomial& o) const = default;

    void canonicalize();
};

/// Q-linear combination of TautMonomials sharing an ambient C_g^n; zero
/// coefficients are never stored.
class TautExpression {
public:
    explicit TautExpression(int points = 0) : points_(points) {}
    static TautExpression zero(int n) { return TautExpression(n); }
    static TautExpression unit(int n);
    static TautExpression of(TautMonomial m, Rational c = 1);

    int points() const { return points_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<TautMonomial, Rational>& terms() const { return terms_; }

    void add_term(TautMonomial m, const Rational& c);
    TautExpression& operator+=(const TautExpression& o);
    TautExpression& operator-=(const TautExpression& o);
    TautExpression operator+(const TautExpression& o) const;
    TautExpression operator-(const TautExpression& o) const;
    TautExpression operator*(const TautExpression& o) const;
    TautExpression operator*(const Rational& c) const;

    TautExpression pulled_back_to(int n) const;

    std::string str() const;

    bool operator==(const TautExpression& o) const = default;

private:
    int points_;
    std::map<TautMonomial, Rational> terms_;
};

// Delta_m = D_{1,m} + ... + D_{m-1,m} on C_g^n (m <= n).
TautExpression delta_sum(int n, int m);

// Picks which applicable rewrite to fire next (for confluence testing);
// receives the number of applicable rewrites, returns an index.
using RewriteChooser = std::function<std::size_t(std::size_t)>;

// Rewrites M with the Harris-Mumford identities until, with respect to the
// top point n, every term is a pullback from C_g^{n-1} times either a single
// D_{i,n} or a power of K_n.
TautExpression normalize(const TautMonomial& m, const RewriteChooser& choose = nullptr);
TautExpression normalize(const TautExpression& e, const RewriteChooser& choose = nullptr);

// pi_{n*} forgetting the top point: D_{i,n} terms drop the diagonal,
// K_n^k terms pick up kappa_{k-1} (kappa_0 = 2g-2), pure pullbacks die.
TautExpression pushforward(const TautExpression& e, unsigned g);

} // namespace tautring
