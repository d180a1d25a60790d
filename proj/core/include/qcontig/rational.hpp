#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace qcontig {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// r^e for integer e (negative allowed; r must be nonzero then).
Rational pow_rational(const Rational& r, long e);

/// Exact square root if r is a perfect square of a rational, else nullopt.
bool try_sqrt(const Rational& r, Rational& out);

} // namespace qcontig
