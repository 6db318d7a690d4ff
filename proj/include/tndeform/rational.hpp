#pragma once

#include <gmpxx.h>

#include <string>

namespace tnd {

// Arbitrary-precision rational. mpq_class keeps values canonical
// (gcd(|num|, den) = 1, den >= 1), which is exactly the invariant the
// rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den, canonicalized. Throws std::invalid_argument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "num/den" or a bare integer "num".
Rational parse_rational(const std::string& text);

std::string to_fraction_string(const Rational& r);

// 2^e, e of either sign.
Rational pow2(long e);

Rational rational_pow(const Rational& base, unsigned long e);

// 1 / b^k for integer b >= 1.
Rational inv_pow(unsigned long b, unsigned long k);

// Largest multiple of 2^-bits that is <= r (resp. smallest >= r).
Rational dyadic_floor(const Rational& r, unsigned bits);
Rational dyadic_ceil(const Rational& r, unsigned bits);

// Decimal rendering with directed rounding, `digits` fractional places.
std::string decimal_floor(const Rational& r, unsigned digits);
std::string decimal_ceil(const Rational& r, unsigned digits);

// Upper bound on r (>= 0) rendered as short scientific notation, e.g. "1.3e-12".
std::string sci_upper(const Rational& r);

double to_double(const Rational& r);

}  // namespace tnd
