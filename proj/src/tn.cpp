#include "tndeform/tn.hpp"

#include <stdexcept>

namespace tnd {

Rational tn_exact(const DeformKey& key) {
    const int n = key.level;
    const auto& parts = key.composition.parts();
    if (n <= 0) throw std::invalid_argument("tn_exact: level must be >= 1");
    if (parts.empty()) throw std::invalid_argument("tn_exact: empty composition");
    const int r = static_cast<int>(parts.size());

    // layer j holds S_j(b) = Σ over admissible chains starting at b_j = b;
    // b_j <= 1 + (r-j+1)*n
    auto layer_cap = [&](int j) { return 1 + (r - j + 1) * n; };

    std::vector<Rational> layer(layer_cap(r) + 1);
    for (int b = 1; b <= n + 1; ++b)
        layer[b] = inv_pow(b, static_cast<unsigned long>(parts[r - 1]));

    for (int j = r - 1; j >= 1; --j) {
        const int cap_next = layer_cap(j + 1);
        const int cap = layer_cap(j);
        std::vector<Rational> prefix(cap_next + 1);
        for (int b = 1; b <= cap_next; ++b) prefix[b] = prefix[b - 1] + layer[b];
        std::vector<Rational> next(cap + 1);
        for (int b = 1; b <= cap; ++b) {
            int hi = std::min(b, cap_next);
            int lo = std::max(1, b - n);
            if (lo > hi) continue;
            Rational window = prefix[hi] - prefix[lo - 1];
            if (window == 0) continue;
            next[b] = inv_pow(b, static_cast<unsigned long>(parts[j - 1])) * window;
        }
        layer = std::move(next);
    }

    Rational total = 0;
    for (const auto& v : layer) total += v;
    return total;
}

namespace {

Rational brute_rec(int n, const std::vector<int>& parts, int j, int suffix) {
    if (j < 0) return 1;
    Rational sum = 0;
    for (int a = 0; a <= n; ++a) {
        int s = suffix + a;
        sum += inv_pow(static_cast<unsigned long>(1 + s),
                       static_cast<unsigned long>(parts[j])) *
               brute_rec(n, parts, j - 1, s);
    }
    return sum;
}

}  // namespace

Rational tn_bruteforce(const DeformKey& key) {
    const int n = key.level;
    if (n <= 0) throw std::invalid_argument("tn_bruteforce: level must be >= 1");
    const auto& parts = key.composition.parts();
    double size = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        size *= n + 1;
        if (size > 1e7) throw std::invalid_argument("tn_bruteforce: size guard exceeded");
    }
    // recursion runs the suffix sums a_j + ... + a_r right to left
    return brute_rec(n, parts, static_cast<int>(parts.size()) - 1, 0);
}

std::vector<Rational> tn_monotone_table(int n, const Composition& base,
                                        int extension_part, int steps) {
    if (steps < 1) throw std::invalid_argument("tn_monotone_table: steps < 1");
    std::vector<Rational> out;
    out.reserve(steps);
    Composition c = base;
    for (int i = 0; i < steps; ++i) {
        out.push_back(tn_exact({n, c}));
        c = c.append(extension_part);
    }
    return out;
}

}  // namespace tnd
