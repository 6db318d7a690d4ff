#pragma once

#include "tndeform/rational.hpp"

#include <string>

namespace tnd {

// Closed rational interval [lo, hi] certified to contain a real value.
// Every non-exact quantity in this library travels as an Enclosure.
struct Enclosure {
    Rational lo;
    Rational hi;

    Enclosure() : lo(0), hi(0) {}
    explicit Enclosure(const Rational& point) : lo(point), hi(point) {}
    Enclosure(const Rational& l, const Rational& h);  // throws if l > h

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }
    // certified strict order between the underlying reals
    bool strictly_below(const Enclosure& o) const { return hi < o.lo; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Rational& s, const Enclosure& a);
Enclosure operator/(const Enclosure& a, const Rational& s);  // s != 0
// reciprocal of an interval not containing 0
Enclosure reciprocal(const Enclosure& a);

// Widen outward onto the dyadic grid 2^-bits. Keeps enclosures valid while
// bounding the size of the rationals involved in long summations.
Enclosure round_outward(const Enclosure& e, unsigned bits);

// "[lo, hi] width <= w" with outward-rounded decimals.
std::string format_enclosure(const Enclosure& e, unsigned digits = 15);

}  // namespace tnd
