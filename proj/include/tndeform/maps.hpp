#pragma once

#include "tndeform/composition.hpp"
#include "tndeform/enclosure.hpp"
#include "tndeform/series.hpp"
#include "tndeform/tn.hpp"

#include <optional>
#include <vector>

namespace tnd {

// A jump of the saltus part: the dyadic point Σ_j 2^{-K_j} attached to the
// composition (k_1..k_r) whose integral gives the jump height.
struct JumpSite {
    Composition composition;
    Rational point;  // = tau((k_1,...,k_{r-1},k_r+1) ++ ones tail)
    int weight = 0;  // K_r
};

JumpSite make_jump_site(const Composition& c);  // c non-empty

// All compositions of weight <= max_weight, weight ascending then
// lexicographic; deterministic.
std::vector<Composition> enumerate_compositions(int max_weight);

// Limit of T_n along the spec'd sequence. Ones tails integrate against the
// exponential seed, twos tails against the twos-tail seed; both plans carry
// the (1 + t_n) factor at every prefix partial sum.
Enclosure eta_tail(int n, const TailSpec& t, int order);

// Encloses F_n(x) = eta_n(tau^{-1}(x)) between the exact deformation value of
// the depth-long prefix and the ones-tail limit above it.
Enclosure fn_enclosure(int n, const Rational& x, int depth, int order);

// Jump height at the site: the prefix factors with the final block replaced
// by the seed e_n - 1 - t_n.
Enclosure hn_value(int n, const JumpSite& site, int order);

// Memoized jump heights for every site of weight <= max_weight.
// Values are rounded outward to 192 fractional bits so that long sums stay
// cheap and exact.
class SiteTable {
public:
    struct Entry {
        JumpSite site;
        Enclosure value;
    };

    SiteTable(int n, int max_weight, int order);

    int level() const { return n_; }
    int max_weight() const { return max_weight_; }
    int order() const { return order_; }
    const std::vector<Entry>& entries() const { return entries_; }

    // Σ h over enumerated sites with point < x, in enumeration order.
    Enclosure sum_below(const Rational& x) const;
    // Σ h over enumerated sites with a <= point < b.
    Enclosure sum_range(const Rational& a, const Rational& b) const;

    // Upper bound on the total mass of ALL omitted sites (weight > cutoff):
    // Σ_{K>W} 2^{K-1} · 2n e^{(n+2)n} / (n+2)^K, closed form.
    const Rational& omitted_mass_bound() const { return omitted_; }
    // Same, restricted to sites inside a window of the given width
    // (#sites of weight K in the window <= width·2^{K-1} + 1).
    Rational omitted_window_bound(const Rational& width) const;

private:
    int n_, max_weight_, order_;
    std::vector<Entry> entries_;
    Rational omitted_;
};

// Shared, lazily built tables keyed by (n, max_weight, order).
const SiteTable& site_table(int n, int max_weight, int order);

// Saltus part: strict sum over sites below x plus the omitted-mass tail on
// the upper end. Left-continuous by construction.
Enclosure Hn_value(int n, const Rational& x, int weight_cutoff, int order);
Enclosure Hn_value(const SiteTable& table, const Rational& x);

// Right limit at x: adds the jump at x itself when x is a site.
Enclosure Hn_right_limit(const SiteTable& table, const Rational& x);

// Σ h over sites in [a, b), enumerated ones exactly and omitted ones through
// the localized window bound. This is the sharp jump detector: the global
// omitted-mass tail cancels between the two endpoints because the omitted
// mass below x is nondecreasing in x.
Enclosure hn_window_sum(const SiteTable& table, const Rational& a, const Rational& b);

// G_n = F_n + H_n, interval sum of the two components.
Enclosure Gn_value(int n, const Rational& x, int depth, int weight_cutoff, int order);

struct PreimageResult {
    Enclosure x_interval;  // [a, b]: F(a).lo <= y0 <= F(b).hi
    Rational achieved_width;
    bool met_tolerance = false;
};

// Dyadic bisection for inf{x : F_n(x) > y0}; requires 1 < y0 < e^{1+...+1/n}.
// Reports the best achieved bracket if the tolerance is out of reach for the
// iteration budget.
PreimageResult fn_preimage(int n, const Rational& y0, const Rational& tol,
                           int depth = 24, int order = 60);

struct BiLipschitzResult {
    Enclosure ratio;  // (eta(k) - eta(l)) * 2^{K_{r0}}
    Enclosure c1;     // min{7/4 - zeta(2), 1/3}
    Enclosure c2;     // n e^{2n}
    int norm_weight = 0;  // K_{r0}
};

// Two-sided difference bounds for k > l, both with every part >= 2.
BiLipschitzResult bilipschitz_ratio(int n, const TailSpec& k, const TailSpec& l,
                                    int order);

struct OrderWitness {
    TailSpec k, l;       // k above l in the order
    Enclosure eta_k, eta_l;  // certified eta(k) < eta(l)
};

// Searches pairs outside the all-parts->=2 class for a certified order
// violation; empty result means none found within the budget.
std::optional<OrderWitness> order_witness_search(int n, int budget, int order);

}  // namespace tnd
