#pragma once

#include "tndeform/rational.hpp"

#include <string>
#include <vector>

namespace tnd {

// Finite sequence of integer parts >= 1. The empty composition is allowed
// (weight 0).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    // "2,1,3"; empty string parses to the empty composition.
    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    Composition append(int part) const;
    // K_1 < K_2 < ... < K_r
    std::vector<int> prefix_sums() const;

    std::string str() const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return parts_ != o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

enum class Tail { Ones, Twos };

// prefix ++ (c, c, c, ...), c = 1 or 2. The only infinite index sequences the
// library represents exactly; everything else enters through finite prefixes.
struct TailSpec {
    Composition prefix;
    Tail tail = Tail::Ones;

    // part of the full infinite sequence, 0-based
    int part_at(std::size_t i) const;

    // "2,1,3+1*" / "+2*" (empty prefix)
    static TailSpec parse(const std::string& text);
    std::string str() const;

    bool operator==(const TailSpec& o) const {
        return tail == o.tail && prefix == o.prefix;
    }
};

enum class Ordering { Less, Equal, Greater };

// Lexicographic order in which the *smaller* integer is the larger element;
// Greater means k comes strictly above l.
Ordering lex_compare(const TailSpec& k, const TailSpec& l);

// Σ_j 2^{-K_j} over the whole infinite sequence, evaluated exactly.
Rational tau(const TailSpec& t);

// First `depth` parts of the unique sequence mapping to x under tau, using
// the binary expansion with infinitely many 1-bits (so dyadic rationals get
// the ones-tail expansion). Requires 0 < x <= 1, depth >= 1.
Composition tau_inverse(const Rational& x, int depth);

struct MembershipFlags {
    bool in_universe = true;  // every TailSpec is a valid index sequence
    bool in_min_two = false;  // all parts >= 2
    bool in_dyadic_class = false;  // eventually ones with some part >= 2
};

MembershipFlags classify(const TailSpec& t);

// tau of a ones-tail spec together with the least l such that 2^l * value is
// an integer.
struct DyadicPoint {
    Rational value;
    long denom_exponent = 0;
};

DyadicPoint dyadic_point(const TailSpec& t);  // requires Tail::Ones

}  // namespace tnd
