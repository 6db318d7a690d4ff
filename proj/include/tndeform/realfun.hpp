#pragma once

#include "tndeform/enclosure.hpp"

namespace tnd {

// Rigorous enclosures of elementary functions at rational arguments.
// Series lengths are chosen adaptively so the result width is at most
// 2^-min_bits (plus the unavoidable remainder floor for huge arguments).

Enclosure exp_enclosure(const Rational& x, unsigned min_bits = 96);
Enclosure exp_enclosure(const Enclosure& x, unsigned min_bits = 96);

// natural log, x > 0
Enclosure ln_enclosure(const Rational& x, unsigned min_bits = 96);
Enclosure ln_enclosure(const Enclosure& x, unsigned min_bits = 96);

// x >= 0
Enclosure sqrt_enclosure(const Rational& x, unsigned min_bits = 96);

// base^e for base > 0, via exp(e * ln base)
Enclosure pow_enclosure(const Rational& base, const Rational& exponent,
                        unsigned min_bits = 96);

// Σ_{m>=1} 1/m² (partial sum + integral-comparison tail), cached.
Enclosure zeta2_enclosure();

}  // namespace tnd
