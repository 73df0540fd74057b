#pragma once

#include <gmpxx.h>

#include <string>

#include "prg/errors.hpp"

namespace prg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational from numerator and denominator (lowest terms,
/// positive denominator).
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool fits_int64(const Integer& z) { return z.fits_slong_p(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace prg
