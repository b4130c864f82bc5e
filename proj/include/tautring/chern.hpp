#pragma once

#include <map>

#include "tautring/taut_expression.hpp"

namespace tautring {

// Degree-k part of c(F_n) = (1+K_1)(1+K_2-Delta_2)...(1+K_n-Delta_n),
// built by the recursion c_k(F_n) = c_k(F_{n-1}) + (K_n-Delta_n) c_{k-1}(F_{n-1}).
TautExpression chern_f(int n, int k);

// c_k(F_n - E) = sum_{i=0}^{k} (-1)^i lambda_i c_{k-i}(F_n), lambda_i = 0 for i > g.
TautExpression chern_fe(int n, int k, unsigned g);

// lambda_i as a polynomial in the odd kappa classes, from
//   sum lambda_i t^i = exp( sum_{i>=1} B_{2i} kappa_{2i-1} t^{2i-1} / (2i(2i-1)) ).
// Keys are kappa multi-indices of degree i.
std::map<MultiIndex, Rational> lambda_polynomial(unsigned i);

// Replaces every lambda factor by its kappa polynomial; terms with a
// lambda index above g vanish.
TautExpression lambda_to_kappa(const TautExpression& e, unsigned g);

} // namespace tautring
