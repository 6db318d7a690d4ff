#include "tndeform/realfun.hpp"

#include <stdexcept>

namespace tnd {

namespace {

// e^x for x >= 0: partial Taylor sum; the remainder past term N is bounded by
// term_N * rho/(1-rho) with rho = x/(N+1) once rho < 1.
Enclosure exp_nonneg(const Rational& x, unsigned min_bits) {
    if (x == 0) return Enclosure(Rational(1));
    const Rational target = pow2(-static_cast<long>(min_bits));
    Rational sum = 1;
    Rational term = 1;
    unsigned long k = 0;
    while (true) {
        ++k;
        term *= x;
        term /= static_cast<unsigned long>(k);
        sum += term;
        Rational rho = x / static_cast<unsigned long>(k + 1);
        if (rho < 1) {
            Rational rem = term * rho / (1 - rho);
            if (rem <= target) return {sum, sum + rem};
        }
        if (k > 100000) throw std::runtime_error("exp_enclosure: series did not settle");
    }
}

}  // namespace

Enclosure exp_enclosure(const Rational& x, unsigned min_bits) {
    if (x >= 0) return exp_nonneg(x, min_bits);
    return reciprocal(exp_nonneg(-x, min_bits + 8));
}

Enclosure exp_enclosure(const Enclosure& x, unsigned min_bits) {
    return {exp_enclosure(x.lo, min_bits).lo, exp_enclosure(x.hi, min_bits).hi};
}

namespace {

// atanh(z) for rational z, |z| < 1/2; directed bounds from the odd series.
Enclosure atanh_enclosure(const Rational& z, unsigned min_bits) {
    if (z == 0) return Enclosure(Rational(0));
    if (z < 0) {
        Enclosure p = atanh_enclosure(-z, min_bits);
        return {-p.hi, -p.lo};
    }
    const Rational target = pow2(-static_cast<long>(min_bits));
    Rational z2 = z * z;
    Rational sum = z;
    Rational pw = z;
    unsigned long k = 0;
    while (true) {
        ++k;
        pw *= z2;
        sum += pw / static_cast<unsigned long>(2 * k + 1);
        // tail <= pw*z^2/(2k+3) * 1/(1-z^2), all terms positive
        Rational rem = pw * z2 / static_cast<unsigned long>(2 * k + 3) / (1 - z2);
        if (rem <= target) return {sum, sum + rem};
        if (k > 100000) throw std::runtime_error("ln_enclosure: series did not settle");
    }
}

Enclosure ln2_enclosure(unsigned min_bits) {
    // ln 2 = 2 atanh(1/3)
    Enclosure a = atanh_enclosure(make_rational(1, 3), min_bits + 4);
    return {2 * a.lo, 2 * a.hi};
}

}  // namespace

Enclosure ln_enclosure(const Rational& x, unsigned min_bits) {
    if (x <= 0) throw std::domain_error("ln_enclosure: nonpositive argument");
    // range-reduce into [2/3, 4/3] by powers of two
    Rational m = x;
    long e = 0;
    const Rational four_thirds = make_rational(4, 3);
    const Rational two_thirds = make_rational(2, 3);
    while (m > four_thirds) { m /= 2; ++e; }
    while (m < two_thirds) { m *= 2; --e; }
    Enclosure lnm = [&] {
        Rational z = (m - 1) / (m + 1);
        Enclosure a = atanh_enclosure(z, min_bits + 4);
        return Enclosure{2 * a.lo, 2 * a.hi};
    }();
    if (e == 0) return lnm;
    Enclosure l2 = ln2_enclosure(min_bits + 4);
    return Rational(e) * l2 + lnm;
}

Enclosure ln_enclosure(const Enclosure& x, unsigned min_bits) {
    return {ln_enclosure(x.lo, min_bits).lo, ln_enclosure(x.hi, min_bits).hi};
}

Enclosure sqrt_enclosure(const Rational& x, unsigned min_bits) {
    if (x < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    if (x == 0) return Enclosure(Rational(0));
    // sqrt(p/q) = sqrt(p*q)/q; floor integer sqrt at 2^bits scaling
    Integer pq = x.get_num() * x.get_den();
    Integer scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), pq.get_mpz_t(), 2 * min_bits);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Integer denom;
    mpz_mul_2exp(denom.get_mpz_t(), x.get_den().get_mpz_t(), min_bits);
    return {make_rational(root, denom), make_rational(root + 1, denom)};
}

Enclosure pow_enclosure(const Rational& base, const Rational& exponent,
                        unsigned min_bits) {
    if (exponent == 0) return Enclosure(Rational(1));
    Enclosure lnb = ln_enclosure(base, min_bits + 16);
    return exp_enclosure(exponent * lnb, min_bits);
}

Enclosure zeta2_enclosure() {
    static const Enclosure cached = [] {
        const unsigned long N = 1024;
        // outward-rounded accumulation keeps the partial sum's rationals small
        Rational lo = 0, hi = 0;
        for (unsigned long m = 1; m <= N; ++m) {
            Rational t = inv_pow(m, 2);
            lo = dyadic_floor(lo + t, 160);
            hi = dyadic_ceil(hi + t, 160);
        }
        // 1/(N+1) < Σ_{m>N} 1/m² < 1/N
        return Enclosure{lo + make_rational(1, N + 1), hi + make_rational(1, N)};
    }();
    return cached;
}

}  // namespace tnd
