#pragma once

#include "tautring/rational.hpp"

namespace tautring {

Integer factorial(unsigned long n);

// k!! for k >= -1, with (-1)!! = 0!! = 1.
Integer double_factorial(long k);

Integer binomial(unsigned long n, unsigned long k);

// Signed Bernoulli number B_n for even n >= 2 (B_2 = 1/6, B_4 = -1/30).
Rational bernoulli(unsigned n);

} // namespace tautring
