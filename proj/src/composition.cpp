#include "tndeform/composition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tnd {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Composition: part < 1");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument("Composition: bad part '" + item + "'");
            parts.push_back(v);
        }
    }
    return Composition(std::move(parts));
}

Composition Composition::append(int part) const {
    std::vector<int> p = parts_;
    p.push_back(part);
    return Composition(std::move(p));
}

std::vector<int> Composition::prefix_sums() const {
    std::vector<int> sums;
    sums.reserve(parts_.size());
    int acc = 0;
    for (int p : parts_) sums.push_back(acc += p);
    return sums;
}

std::string Composition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int TailSpec::part_at(std::size_t i) const {
    if (i < prefix.size()) return prefix.parts()[i];
    return tail == Tail::Ones ? 1 : 2;
}

TailSpec TailSpec::parse(const std::string& text) {
    auto plus = text.rfind('+');
    if (plus == std::string::npos || plus + 3 != text.size() || text.back() != '*')
        throw std::invalid_argument("TailSpec: expected '<parts>+1*' or '<parts>+2*'");
    char c = text[plus + 1];
    if (c != '1' && c != '2')
        throw std::invalid_argument("TailSpec: tail must be 1 or 2");
    TailSpec t;
    t.prefix = Composition::parse(text.substr(0, plus));
    t.tail = c == '1' ? Tail::Ones : Tail::Twos;
    return t;
}

std::string TailSpec::str() const {
    return prefix.str() + (tail == Tail::Ones ? "+1*" : "+2*");
}

Ordering lex_compare(const TailSpec& k, const TailSpec& l) {
    std::size_t limit = std::max(k.prefix.size(), l.prefix.size()) + 1;
    for (std::size_t i = 0; i < limit; ++i) {
        int a = k.part_at(i), b = l.part_at(i);
        if (a != b) return a < b ? Ordering::Greater : Ordering::Less;
    }
    // identical up to both prefixes; beyond that both are constant, and the
    // position `limit-1` already compared those constants
    return Ordering::Equal;
}

Rational tau(const TailSpec& t) {
    Rational sum = 0;
    int acc = 0;
    for (int p : t.prefix.parts()) {
        acc += p;
        sum += pow2(-acc);
    }
    // ones tail: Σ_{m>=1} 2^{-(K_r+m)} = 2^{-K_r}
    // twos tail: Σ_{m>=1} 2^{-(K_r+2m)} = 2^{-K_r}/3
    if (t.tail == Tail::Ones) return sum + pow2(-acc);
    return sum + pow2(-acc) / 3;
}

Composition tau_inverse(const Rational& x, int depth) {
    if (x <= 0 || x > 1)
        throw std::invalid_argument("tau_inverse: x outside (0,1]");
    if (depth < 1) throw std::invalid_argument("tau_inverse: depth < 1");
    // Invariant: the remaining mass rho satisfies 0 < rho <= 2^{-K_prev}; the
    // next partial sum K is the unique integer with 2^{-K} < rho <= 2^{-K+1},
    // which lands dyadic remainders on the ones-tail expansion automatically.
    std::vector<int> parts;
    Rational rho = x;
    long prev = 0;
    for (int i = 0; i < depth; ++i) {
        long k = 0;
        Integer v = rho.get_num();
        while (v <= rho.get_den()) {
            v <<= 1;
            ++k;
        }
        // now 2^{-k} < rho and 2^{-(k-1)} >= rho
        parts.push_back(static_cast<int>(k - prev));
        rho -= pow2(-k);
        prev = k;
    }
    return Composition(std::move(parts));
}

MembershipFlags classify(const TailSpec& t) {
    MembershipFlags f;
    bool all_ge2 = true, some_ge2 = false;
    for (int p : t.prefix.parts()) {
        if (p < 2) all_ge2 = false;
        if (p >= 2) some_ge2 = true;
    }
    f.in_min_two = all_ge2 && t.tail == Tail::Twos;
    f.in_dyadic_class = t.tail == Tail::Ones && some_ge2;
    return f;
}

DyadicPoint dyadic_point(const TailSpec& t) {
    if (t.tail != Tail::Ones)
        throw std::invalid_argument("dyadic_point: requires a ones tail");
    DyadicPoint d;
    d.value = tau(t);
    // canonical denominator is a power of two
    d.denom_exponent =
        static_cast<long>(mpz_sizeinbase(d.value.get_den().get_mpz_t(), 2)) - 1;
    return d;
}

}  // namespace tnd
