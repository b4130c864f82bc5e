#pragma once

#include <gmpxx.h>
#include <string>

namespace tautring {

using Integer = mpz_class;
using Rational = mpq_class;

// "num" or "num/den", canonicalized.
inline Rational parse_rational(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace tautring
