#include "tndeform/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace tnd {

Enclosure::Enclosure(const Rational& l, const Rational& h) : lo(l), hi(h) {
    if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

Enclosure operator*(const Rational& s, const Enclosure& a) {
    if (s >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

Enclosure operator/(const Enclosure& a, const Rational& s) {
    if (s == 0) throw std::invalid_argument("Enclosure: division by zero");
    if (s > 0) return {a.lo / s, a.hi / s};
    return {a.hi / s, a.lo / s};
}

Enclosure reciprocal(const Enclosure& a) {
    if (a.lo <= 0 && a.hi >= 0)
        throw std::domain_error("reciprocal: interval contains zero");
    return {1 / a.hi, 1 / a.lo};
}

Enclosure round_outward(const Enclosure& e, unsigned bits) {
    return {dyadic_floor(e.lo, bits), dyadic_ceil(e.hi, bits)};
}

std::string format_enclosure(const Enclosure& e, unsigned digits) {
    return "[" + decimal_floor(e.lo, digits) + ", " + decimal_ceil(e.hi, digits) +
           "] width <= " + sci_upper(e.width());
}

}  // namespace tnd
