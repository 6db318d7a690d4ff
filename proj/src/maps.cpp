#include "tndeform/maps.hpp"

#include "tndeform/realfun.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tnd {

JumpSite make_jump_site(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("make_jump_site: empty composition");
    JumpSite s;
    s.composition = c;
    Rational point = 0;
    for (int k : c.prefix_sums()) point += pow2(-k);
    s.point = std::move(point);
    s.weight = c.weight();
    return s;
}

namespace {

void compositions_of(int weight, std::vector<int>& buf,
                     std::vector<Composition>& out) {
    if (weight == 0) {
        out.emplace_back(buf);
        return;
    }
    for (int first = 1; first <= weight; ++first) {
        buf.push_back(first);
        compositions_of(weight - first, buf, out);
        buf.pop_back();
    }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int max_weight) {
    std::vector<Composition> out;
    std::vector<int> buf;
    for (int w = 1; w <= max_weight; ++w) compositions_of(w, buf, out);
    return out;
}

Enclosure eta_tail(int n, const TailSpec& t, int order) {
    PipelinePlan plan;
    plan.level = n;
    plan.steps = t.prefix.weight();
    plan.factor_ends = t.prefix.prefix_sums();
    plan.seed = t.tail == Tail::Ones ? Seed::En : Seed::Gn;
    return run_pipeline(plan, order);
}

Enclosure fn_enclosure(int n, const Rational& x, int depth, int order) {
    if (x <= 0 || x > 1)
        throw std::invalid_argument("fn_enclosure: x outside (0,1]");
    Composition prefix = tau_inverse(x, depth);
    Rational lo = tn_exact({n, prefix});
    TailSpec ones{prefix, Tail::Ones};
    return {std::move(lo), eta_tail(n, ones, order).hi};
}

Enclosure hn_value(int n, const JumpSite& site, int order) {
    PipelinePlan plan;
    plan.level = n;
    plan.steps = site.weight;
    plan.factor_ends = site.composition.prefix_sums();
    plan.factor_ends.pop_back();  // the final block carries the seed, no factor
    plan.seed = Seed::DeltaN;
    return run_pipeline(plan, order);
}

SiteTable::SiteTable(int n, int max_weight, int order)
    : n_(n), max_weight_(max_weight), order_(order) {
    if (n < 1) throw std::invalid_argument("SiteTable: level < 1");
    if (max_weight < 1) throw std::invalid_argument("SiteTable: max_weight < 1");
    for (const Composition& c : enumerate_compositions(max_weight)) {
        Entry e;
        e.site = make_jump_site(c);
        e.value = round_outward(hn_value(n, e.site, order), 192);
        entries_.push_back(std::move(e));
    }
    // Σ_{K>W} 2^{K-1} · 2n e^{(n+2)n} / (n+2)^K  =  e^{(n+2)n} 2^{W+1} / (n+2)^W
    Rational expn = exp_enclosure(Rational(n * (n + 2))).hi;
    omitted_ = expn * pow2(max_weight + 1) *
               inv_pow(static_cast<unsigned long>(n + 2),
                       static_cast<unsigned long>(max_weight));
}

Enclosure SiteTable::sum_below(const Rational& x) const {
    Enclosure sum;
    for (const auto& e : entries_)
        if (e.site.point < x) sum = sum + e.value;
    return sum;
}

Enclosure SiteTable::sum_range(const Rational& a, const Rational& b) const {
    Enclosure sum;
    for (const auto& e : entries_)
        if (a <= e.site.point && e.site.point < b) sum = sum + e.value;
    return sum;
}

Rational SiteTable::omitted_window_bound(const Rational& width) const {
    const int n = n_, W = max_weight_;
    Rational expn = exp_enclosure(Rational(n * (n + 2))).hi;
    Rational two_over = make_rational(2, n + 2);
    Rational geom_counted = rational_pow(two_over, W + 1) * Rational(n + 2) / Rational(n);
    Rational geom_single = inv_pow(static_cast<unsigned long>(n + 2),
                                   static_cast<unsigned long>(W + 1)) *
                           Rational(n + 2) / Rational(n + 1);
    return 2 * n * expn * (width / 2 * geom_counted + geom_single);
}

const SiteTable& site_table(int n, int max_weight, int order) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<SiteTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, max_weight, order);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<SiteTable>(n, max_weight, order)).first;
    return *it->second;
}

Enclosure Hn_value(const SiteTable& table, const Rational& x) {
    if (x <= 0 || x > 1) throw std::invalid_argument("Hn_value: x outside (0,1]");
    Enclosure s = table.sum_below(x);
    return {s.lo, s.hi + table.omitted_mass_bound()};
}

Enclosure Hn_value(int n, const Rational& x, int weight_cutoff, int order) {
    return Hn_value(site_table(n, weight_cutoff, order), x);
}

Enclosure Hn_right_limit(const SiteTable& table, const Rational& x) {
    Enclosure s = table.sum_below(x);
    for (const auto& e : table.entries())
        if (e.site.point == x) {
            s = s + e.value;
            break;
        }
    return {s.lo, s.hi + table.omitted_mass_bound()};
}

Enclosure hn_window_sum(const SiteTable& table, const Rational& a, const Rational& b) {
    if (a > b) throw std::invalid_argument("hn_window_sum: a > b");
    Enclosure s = table.sum_range(a, b);
    return {s.lo, s.hi + table.omitted_window_bound(b - a)};
}

Enclosure Gn_value(int n, const Rational& x, int depth, int weight_cutoff, int order) {
    return fn_enclosure(n, x, depth, order) + Hn_value(n, x, weight_cutoff, order);
}

PreimageResult fn_preimage(int n, const Rational& y0, const Rational& tol, int depth,
                           int order) {
    Rational harmonic = 0;
    for (int k = 1; k <= n; ++k) harmonic += make_rational(1, k);
    if (y0 <= 1 || y0 >= exp_enclosure(harmonic).lo)
        throw std::domain_error("fn_preimage: target outside (1, e^{1+...+1/n})");
    if (tol <= 0) throw std::invalid_argument("fn_preimage: tol <= 0");

    // find a left endpoint with F(a).hi < y0
    Rational a = pow2(-8);
    while (fn_enclosure(n, a, depth, order).hi >= y0) {
        a /= 16;
        if (a < pow2(-80))
            throw std::domain_error("fn_preimage: no left endpoint below target");
    }
    Rational b = 1;

    const int max_iters = 80;
    for (int i = 0; i < max_iters && b - a > tol; ++i) {
        Rational mid = (a + b) / 2;
        if (fn_enclosure(n, mid, depth, order).hi < y0)
            a = mid;
        else
            b = mid;
    }
    PreimageResult res;
    res.x_interval = {a, b};
    res.achieved_width = b - a;
    res.met_tolerance = res.achieved_width <= tol;
    return res;
}

namespace {

Enclosure interval_min(const Enclosure& a, const Enclosure& b) {
    return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

int first_difference(const TailSpec& k, const TailSpec& l) {
    std::size_t limit = std::max(k.prefix.size(), l.prefix.size()) + 1;
    for (std::size_t i = 0; i < limit; ++i)
        if (k.part_at(i) != l.part_at(i)) return static_cast<int>(i);
    return -1;
}

}  // namespace

BiLipschitzResult bilipschitz_ratio(int n, const TailSpec& k, const TailSpec& l,
                                    int order) {
    if (!classify(k).in_min_two || !classify(l).in_min_two)
        throw std::invalid_argument("bilipschitz_ratio: inputs must have all parts >= 2");
    if (lex_compare(k, l) != Ordering::Greater)
        throw std::invalid_argument("bilipschitz_ratio: k must lie above l");
    int r0 = first_difference(k, l);
    long norm = 0;
    for (int i = 0; i <= r0; ++i) norm += k.part_at(i);

    BiLipschitzResult out;
    out.norm_weight = static_cast<int>(norm);
    out.ratio = pow2(norm) * (eta_tail(n, k, order) - eta_tail(n, l, order));
    Enclosure z2 = zeta2_enclosure();
    Enclosure seven_quarters_minus{make_rational(7, 4) - z2.hi, make_rational(7, 4) - z2.lo};
    out.c1 = interval_min(seven_quarters_minus, Enclosure(make_rational(1, 3)));
    out.c2 = Rational(n) * exp_enclosure(Rational(2 * n));
    return out;
}

std::optional<OrderWitness> order_witness_search(int n, int budget, int order) {
    // candidate specs: all prefixes of weight <= 6, both tails, enumeration
    // order (weight asc, lex asc, ones before twos)
    std::vector<TailSpec> specs;
    specs.push_back(TailSpec{Composition(), Tail::Ones});
    specs.push_back(TailSpec{Composition(), Tail::Twos});
    for (const Composition& c : enumerate_compositions(6)) {
        specs.push_back(TailSpec{c, Tail::Ones});
        specs.push_back(TailSpec{c, Tail::Twos});
    }
    std::vector<std::optional<Enclosure>> eta(specs.size());
    auto eta_of = [&](std::size_t i) -> const Enclosure& {
        if (!eta[i]) eta[i] = eta_tail(n, specs[i], order);
        return *eta[i];
    };

    int examined = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (std::size_t j = i + 1; j < specs.size(); ++j) {
            if (classify(specs[i]).in_min_two && classify(specs[j]).in_min_two)
                continue;
            Ordering ord = lex_compare(specs[i], specs[j]);
            if (ord == Ordering::Equal) continue;
            if (++examined > budget) return std::nullopt;
            std::size_t hi = ord == Ordering::Greater ? i : j;
            std::size_t lo = ord == Ordering::Greater ? j : i;
            if (eta_of(hi).hi < eta_of(lo).lo) {
                OrderWitness w;
                w.k = specs[hi];
                w.l = specs[lo];
                w.eta_k = eta_of(hi);
                w.eta_l = eta_of(lo);
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace tnd
