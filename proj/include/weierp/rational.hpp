#pragma once

#include <gmpxx.h>

#include <string>

namespace weierp {

// Exact arbitrary-precision arithmetic. mpq_class keeps values in lowest
// terms with positive denominator as long as inputs are canonical, so all
// construction goes through these helpers.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace weierp
