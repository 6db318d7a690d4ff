#include "tndeform/rational.hpp"

#include <stdexcept>

namespace tnd {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    }
}

std::string to_fraction_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p) : make_rational(1, p);
}

Rational rational_pow(const Rational& base, unsigned long e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    // base canonical => base^e canonical
    Rational q(num, den);
    if (q.get_den() < 0) q.canonicalize();
    return q;
}

Rational inv_pow(unsigned long b, unsigned long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), b, k);
    return make_rational(1, p);
}

namespace {

Integer scaled_floor(const Rational& r, const Integer& scale) {
    Integer q;
    Integer num = r.get_num() * scale;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer scaled_ceil(const Rational& r, const Integer& scale) {
    Integer q;
    Integer num = r.get_num() * scale;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

std::string decimal_from_scaled(const Integer& scaled, unsigned digits) {
    Integer mag = abs(scaled);
    std::string s = mag.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (scaled < 0) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

}  // namespace

Rational dyadic_floor(const Rational& r, unsigned bits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    return make_rational(scaled_floor(r, scale), scale);
}

Rational dyadic_ceil(const Rational& r, unsigned bits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    return make_rational(scaled_ceil(r, scale), scale);
}

std::string decimal_floor(const Rational& r, unsigned digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    return decimal_from_scaled(scaled_floor(r, scale), digits);
}

std::string decimal_ceil(const Rational& r, unsigned digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    return decimal_from_scaled(scaled_ceil(r, scale), digits);
}

std::string sci_upper(const Rational& r) {
    if (r < 0) throw std::invalid_argument("sci_upper: negative value");
    if (r == 0) return "0";
    // e10 = floor(log10 r), found by scan from a digit-count estimate.
    long e10 = static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 10)) -
               static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 10));
    Integer ten = 10;
    auto pow10 = [&](long e) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e >= 0 ? e : -e));
        return e >= 0 ? Rational(p) : make_rational(1, p);
    };
    while (r >= pow10(e10 + 1)) ++e10;
    while (r < pow10(e10)) --e10;
    // two significant digits, rounded up
    Rational mant = r / pow10(e10 - 1);
    Integer m = scaled_ceil(mant, 1);
    if (m > 99) { m = 10; ++e10; }
    std::string ms = m.get_str();
    return ms.substr(0, 1) + "." + ms.substr(1) + "e" + std::to_string(e10);
}

double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

}  // namespace tnd
