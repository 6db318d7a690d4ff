#include "tndeform/verify.hpp"

#include "tndeform/composition.hpp"
#include "tndeform/enclosure.hpp"
#include "tndeform/fractal.hpp"
#include "tndeform/maps.hpp"
#include "tndeform/realfun.hpp"
#include "tndeform/series.hpp"
#include "tndeform/tn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tnd {

namespace {

Rational harmonic(int n) {
    Rational h = 0;
    for (int k = 1; k <= n; ++k) h += make_rational(1, k);
    return h;
}

Integer ipow10(int e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

Rational rat_1e(int e) { return make_rational(1, ipow10(e)); }

VerificationReport report(std::string name, bool pass, std::string witness,
                          std::string tolerance) {
    return {std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail,
            std::move(witness), std::move(tolerance)};
}

std::vector<int> levels_or(const VerifyBudgets& b, std::vector<int> defaults) {
    if (b.level) return {*b.level};
    return defaults;
}

// ---- oracle equivalence -------------------------------------------------

std::vector<VerificationReport> suite_oracle_tn(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int maxw = b.max_weight.value_or(8);
    std::vector<Composition> comps;
    for (const Composition& c : enumerate_compositions(maxw)) {
        bool ok = true;
        for (int p : c.parts()) ok = ok && p <= 4;
        if (ok) comps.push_back(c);
    }
    for (int n : levels_or(b, {1, 2, 3})) {
        int checked = 0;
        std::string first_bad;
        for (const Composition& c : comps) {
            Rational dp = tn_exact({n, c});
            Rational oracle = tn_bruteforce({n, c});
            ++checked;
            if (dp != oracle && first_bad.empty())
                first_bad = c.str() + ": " + to_fraction_string(dp) + " vs " +
                            to_fraction_string(oracle);
        }
        out.push_back(report(
            "oracle-tn n=" + std::to_string(n), first_bad.empty(),
            first_bad.empty() ? std::to_string(checked) + " compositions agree" : first_bad,
            "exact equality, weight <= " + std::to_string(maxw) + ", parts <= 4"));
    }
    return out;
}

// ---- closed-form limit of the all-ones sequence -------------------------

std::vector<VerificationReport> suite_limit_ones(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int order = b.order.value_or(60);
    const Rational width_tol = rat_1e(8);
    for (int n : levels_or(b, {1, 2, 3})) {
        Enclosure eta = eta_tail(n, TailSpec{Composition(), Tail::Ones}, order);
        Enclosure oracle = exp_enclosure(harmonic(n), 128);
        bool pass = eta.intersects(oracle) && eta.width() < width_tol;
        out.push_back(report("limit-ones n=" + std::to_string(n), pass,
                             format_enclosure(eta) + " vs exp-series " +
                                 format_enclosure(oracle),
                             "intersection + width < 1e-8"));
    }
    if (!b.level || *b.level == 1) {
        Composition ones25(std::vector<int>(25, 1));
        Rational t = tn_exact({1, ones25});
        Enclosure e1 = exp_enclosure(Rational(1), 128);
        Enclosure e3 = exp_enclosure(Rational(3), 128);
        bool pass = t < e1.lo && t > e1.hi - rat_1e(5) * e3.lo;
        out.push_back(report("limit-ones gap r=25", pass,
                             "T_1({1}^25) = " + decimal_floor(t, 12) + "..",
                             "inside (e - 1e-5*e^3, e)"));
    }
    return out;
}

// ---- twos-seed coefficient identities ------------------------------------

std::vector<VerificationReport> suite_gn_identities(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int top = b.max_weight.value_or(50);
    for (int n : levels_or(b, {1, 2, 3, 4})) {
        CertifiedSeries g = series_gn(n, top);
        const auto& a = g.coeffs();
        bool closed = true, bounds = true, ode = true;
        std::string bad;
        for (int m = 0; m <= n && m <= top; ++m) {
            Rational want = make_rational(2, Integer(m + 1) * (m + 2));
            if (a[m] != want) { closed = false; bad = "m=" + std::to_string(m); }
        }
        for (int m = n + 1; m <= top; ++m) {
            Rational bm = make_rational(2, Integer(m + 1) * (m + 2));
            Rational envelope = make_rational(2, Integer(m) * (m + 2)) *
                                (make_rational(1, m + 1 - n) - make_rational(1, m + 1));
            if (!(a[m] > 0 && a[m] < bm && a[m] <= envelope)) {
                bounds = false;
                bad = "m=" + std::to_string(m);
            }
        }
        for (int m = 1; m <= top; ++m) {
            Rational lhs = Rational(Integer(m + 1) * (m + 1)) * a[m];
            Rational rhs = 0;
            for (int l = std::max(m - n, 0); l <= m; ++l) rhs += a[l];
            if (lhs != rhs) { ode = false; bad = "m=" + std::to_string(m); }
        }
        bool pass = closed && bounds && ode;
        out.push_back(report("gn-identities n=" + std::to_string(n), pass,
                             pass ? "closed form, bounds, second-order identity hold"
                                  : "failed at " + bad,
                             "exact, m <= " + std::to_string(top)));
    }
    return out;
}

// ---- multiply-then-integrate fixed point ---------------------------------

std::vector<VerificationReport> suite_fixed_point(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int order = b.order.value_or(60);
    for (int n : levels_or(b, {1, 2, 3, 4})) {
        CertifiedSeries en = series_en(n, order);
        CertifiedSeries round = op_integrate(op_mul_one_plus_tn(en, n));
        bool pass = true;
        int bad = -1;
        for (int m = 0; m <= order; ++m)
            if (en.coeffs()[m] != round.coeffs()[m]) { pass = false; bad = m; break; }
        out.push_back(report("fixed-point n=" + std::to_string(n), pass,
                             pass ? "all " + std::to_string(order + 1) + " coefficients fixed"
                                  : "first mismatch at m=" + std::to_string(bad),
                             "exact coefficient equality up to order " +
                                 std::to_string(order)));
    }
    return out;
}

// ---- order isomorphism on the all-parts>=2 class -------------------------

std::vector<TailSpec> min_two_specs(int max_weight) {
    std::vector<TailSpec> specs;
    specs.push_back(TailSpec{Composition(), Tail::Twos});
    for (const Composition& c : enumerate_compositions(max_weight)) {
        bool ok = true;
        for (int p : c.parts()) ok = ok && p >= 2;
        if (ok) specs.push_back(TailSpec{c, Tail::Twos});
    }
    return specs;
}

std::vector<VerificationReport> suite_order_t2(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int order = b.order.value_or(60);
    const int maxw = b.max_weight.value_or(8);
    for (int n : levels_or(b, {1, 2})) {
        auto specs = min_two_specs(maxw);
        std::vector<Enclosure> eta;
        eta.reserve(specs.size());
        for (const auto& s : specs) eta.push_back(eta_tail(n, s, order));
        int violations = 0, unseparated = 0, pairs = 0;
        std::string bad;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            for (std::size_t j = i + 1; j < specs.size(); ++j) {
                ++pairs;
                Ordering ord = lex_compare(specs[i], specs[j]);
                if (ord == Ordering::Equal) {
                    // same sequence spelled two ways: enclosures must agree
                    if (!eta[i].intersects(eta[j])) {
                        ++violations;
                        if (bad.empty()) bad = specs[i].str() + " ~ " + specs[j].str();
                    }
                    continue;
                }
                const Enclosure& above = ord == Ordering::Greater ? eta[i] : eta[j];
                const Enclosure& below = ord == Ordering::Greater ? eta[j] : eta[i];
                if (above.hi <= below.lo) {
                    ++violations;
                    if (bad.empty()) bad = specs[i].str() + " vs " + specs[j].str();
                } else if (!(above.lo > below.hi)) {
                    ++unseparated;
                    if (bad.empty()) bad = specs[i].str() + " vs " + specs[j].str();
                }
            }
        }
        bool pass = violations == 0 && unseparated == 0;
        out.push_back(report(
            "order-t2 n=" + std::to_string(n), pass,
            pass ? std::to_string(pairs) + " pairs ordered and separated"
                 : std::to_string(violations) + " violations, " +
                       std::to_string(unseparated) + " unseparated; first: " + bad,
            "prefix weight <= " + std::to_string(maxw) + ", certified separation"));
    }
    return out;
}

// ---- exponential-minus-polynomial sandwich --------------------------------

std::vector<VerificationReport> suite_lemma_exp(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int order = b.order.value_or(60);
    for (int n : levels_or(b, {1, 2, 3})) {
        CertifiedSeries delta = series_delta(n, order);
        bool pass = true;
        std::string bad;
        for (int j = 1; j <= 9; ++j) {
            Rational u = make_rational(j, 10);
            Rational upow = rational_pow(u, static_cast<unsigned long>(n + 1));
            Rational lower = Rational(n) * upow / Rational(n + 1);
            Rational upper = Rational(2 * n) * upow;
            Enclosure val = eval_at(delta, u);
            if (!(lower < val.lo && val.hi < upper)) {
                pass = false;
                if (bad.empty()) bad = "u=" + std::to_string(j) + "/10";
            }
        }
        out.push_back(report("lemma-exp n=" + std::to_string(n), pass,
                             pass ? "9 grid points strictly inside" : "failed at " + bad,
                             "n u^{n+1}/(n+1) < value < 2n u^{n+1}, strict"));
    }
    return out;
}

// ---- jump height sandwich --------------------------------------------------

std::vector<VerificationReport> suite_lemma_del(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int order = b.order.value_or(60);
    const int maxw = b.max_weight.value_or(8);
    for (int n : levels_or(b, {1, 2, 3})) {
        Enclosure expn = exp_enclosure(Rational(n * (n + 2)));
        bool pass = true;
        int checked = 0;
        std::string bad;
        for (const Composition& c : enumerate_compositions(maxw)) {
            JumpSite site = make_jump_site(c);
            Enclosure h = hn_value(n, site, order);
            Rational scale = inv_pow(static_cast<unsigned long>(n + 2),
                                     static_cast<unsigned long>(site.weight));
            Rational lower = make_rational(n, n + 1) * scale;
            Rational upper_cert = Rational(2 * n) * expn.lo * scale;
            ++checked;
            if (!(h.lo >= lower && h.hi <= upper_cert)) {
                pass = false;
                if (bad.empty()) bad = c.str();
            }
        }
        out.push_back(report("lemma-del n=" + std::to_string(n), pass,
                             pass ? std::to_string(checked) + " sites inside bounds"
                                  : "failed at composition " + bad,
                             "(n/(n+1))/(n+2)^K <= h <= 2n e^{(n+2)n}/(n+2)^K"));
    }
    return out;
}

// ---- affine product bound ---------------------------------------------------

std::vector<VerificationReport> suite_lemma_leq(const VerifyBudgets&) {
    std::vector<VerificationReport> out;
    bool pass = true;
    std::string bad;
    const std::vector<Rational> us{make_rational(1, 2), Rational(1), Rational(2)};
    for (int r = 2; r <= 4; ++r)
        for (int m = 0; m <= 2; ++m)
            for (const Rational& u : us) {
                Enclosure val = run_affine_pipeline(r - 1, u, m, 20);
                Enclosure rhs = exp_enclosure(Rational(m + 1) * u);
                Rational rhs_lo = rhs.lo * inv_pow(static_cast<unsigned long>(m + 1),
                                                   static_cast<unsigned long>(r - 1));
                if (!(val.hi < rhs_lo)) {
                    pass = false;
                    if (bad.empty())
                        bad = "r=" + std::to_string(r) + " m=" + std::to_string(m) +
                              " u=" + to_fraction_string(u);
                }
            }
    out.push_back(report("lemma-leq grid", pass,
                         pass ? "27 grid cases strictly below the bound" : "failed at " + bad,
                         "value < e^{(m+1)u}/(m+1)^{r-1}, strict"));
    return out;
}

// ---- total jump mass ---------------------------------------------------------

std::vector<VerificationReport> suite_jump_mass(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int n = b.level.value_or(1);
    const int W = b.weight_cutoff.value_or(14);
    const int order = b.order.value_or(60);
    const SiteTable& table = site_table(n, W, order);
    Rational bound = 2 * exp_enclosure(Rational(n * (n + 2))).lo;
    Rational running = 0;
    bool pass = true;
    for (const auto& e : table.entries()) {
        running += e.value.hi;
        if (!(running < bound)) { pass = false; break; }
    }
    out.push_back(report("jump-mass n=" + std::to_string(n), pass,
                         "sum over weight <= " + std::to_string(W) + " is " +
                             decimal_ceil(running, 6) + " vs bound " +
                             decimal_floor(bound, 6),
                         "every partial sum < 2 e^{(n+2)n}"));
    return out;
}

// ---- decomposition behavior ---------------------------------------------------

std::vector<VerificationReport> suite_decomposition(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int n = b.level.value_or(1);
    const int depth = b.depth.value_or(24);
    const int W = b.weight_cutoff.value_or(14);
    const int order = b.order.value_or(60);
    const int target_count = b.count.value_or(200);

    const SiteTable& table = site_table(n, W, order);

    // sample pool: dyadics j/256 plus twos-tail rationals of weight <= 9
    std::set<Rational> pool;
    for (int j = 1; j <= 256; ++j) pool.insert(make_rational(j, 256));
    for (const TailSpec& s : min_two_specs(9)) pool.insert(tau(s));
    std::vector<Rational> sorted(pool.begin(), pool.end());
    std::vector<Rational> points;
    for (int i = 0; i < target_count; ++i)
        points.push_back(sorted[i * sorted.size() / target_count]);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    struct Eval {
        Enclosure f, s;
    };
    std::vector<Eval> evals;
    evals.reserve(points.size());
    for (const Rational& x : points)
        evals.push_back({fn_enclosure(n, x, depth, order), table.sum_below(x)});

    int separated = 0, decreases = 0;
    const int pairs = static_cast<int>(points.size()) - 1;
    for (int i = 0; i + 1 < static_cast<int>(points.size()); ++i) {
        // the omitted-site mass is nondecreasing in x, so it cancels here
        Rational incr_lo = (evals[i + 1].f.lo + evals[i + 1].s.lo) -
                           (evals[i].f.hi + evals[i].s.hi);
        if (incr_lo > 0) ++separated;
        Rational g_next_hi =
            evals[i + 1].f.hi + evals[i + 1].s.hi + table.omitted_mass_bound();
        Rational g_prev_lo = evals[i].f.lo + evals[i].s.lo;
        if (g_next_hi < g_prev_lo) ++decreases;
    }
    bool mono_pass = decreases == 0 && separated * 100 >= pairs * 95;
    out.push_back(report(
        "decomposition-monotone n=" + std::to_string(n), mono_pass,
        std::to_string(separated) + "/" + std::to_string(pairs) +
            " consecutive pairs strictly separated, " + std::to_string(decreases) +
            " certified decreases",
        ">= 95% separation, zero decreases"));

    // the jump at 1/2 against the closed form e - 5/2
    Rational half = make_rational(1, 2);
    Enclosure jump = hn_window_sum(table, half, half + pow2(-20));
    Enclosure target = exp_enclosure(Rational(1)) - Enclosure(make_rational(5, 2));
    Rational tol = rat_1e(3);
    bool jump_pass = jump.hi - target.lo <= tol && target.hi - jump.lo <= tol;
    out.push_back(report("decomposition-jump x=1/2", jump_pass,
                         "window sum " + format_enclosure(jump, 10) + " vs e-5/2 " +
                             format_enclosure(target, 10),
                         "distance <= 1e-3 including window tail"));
    return out;
}

// ---- dimension checks ------------------------------------------------------------

std::vector<VerificationReport> suite_moran(const VerifyBudgets&) {
    std::vector<VerificationReport> out;
    const Rational tol = make_rational(1, ipow10(14));
    const Rational close9 = rat_1e(9);

    SimilitudeFamily e2 = SimilitudeFamily::geometric(2, 2);
    Enclosure s = moran_solve(e2, tol);
    Rational mid = s.midpoint();
    Enclosure r = pow_enclosure(Rational(2), 2 * mid, 160) -
                  pow_enclosure(Rational(2), mid, 160) - Enclosure(Rational(1));
    bool resid_pass = r.hi < rat_1e(12) && r.lo > -rat_1e(12);
    out.push_back(report("moran-residual", resid_pass,
                         "2^{2s} - 2^s - 1 at midpoint in " + format_enclosure(r, 16),
                         "|residual| < 1e-12"));

    Enclosure sqrt5 = sqrt_enclosure(Rational(5), 160);
    Enclosure phi{(1 + sqrt5.lo) / 2, (1 + sqrt5.hi) / 2};
    Enclosure target = ln_enclosure(phi, 160) * reciprocal(ln_enclosure(Rational(2), 160));
    bool dim_pass = s.lo >= target.lo - close9 && s.hi <= target.hi + close9;
    Enclosure golden = pow_enclosure(Rational(2), mid, 160);
    bool golden_pass =
        golden.lo >= phi.lo - close9 && golden.hi <= phi.hi + close9;
    out.push_back(report("moran-golden", dim_pass && golden_pass,
                         "s = " + format_enclosure(s, 12) + ", target " +
                             format_enclosure(target, 12),
                         "within 1e-9 of log((1+sqrt5)/2)/log 2; 2^s within 1e-9 of the golden ratio"));

    // classic two-map families: dimension log 2 / log m
    for (int n = 1; n <= 3; ++n) {
        int m = n + 2;
        SimilitudeFamily fam = SimilitudeFamily::finite(
            {{make_rational(1, m), Rational(0)},
             {make_rational(1, m), make_rational(m - 1, m)}});
        Enclosure sm = moran_solve(fam, tol);
        Enclosure tgt =
            ln_enclosure(Rational(2), 160) * reciprocal(ln_enclosure(Rational(m), 160));
        bool pass = sm.lo >= tgt.lo - close9 && sm.hi <= tgt.hi + close9;
        out.push_back(report("moran-cantor m=" + std::to_string(m), pass,
                             "s = " + format_enclosure(sm, 12),
                             "within 1e-9 of log 2/log " + std::to_string(m)));
    }
    return out;
}

std::vector<VerificationReport> suite_boxdim(const VerifyBudgets&) {
    std::vector<VerificationReport> out;

    auto pts3 = cantor_points(3, 12);
    std::vector<Rational> eps3;
    for (int k = 4; k <= 10; ++k) eps3.push_back(inv_pow(3, k));
    DimEstimate d3 = box_count_dim(pts3, eps3);
    double want3 = std::log(2.0) / std::log(3.0);
    bool pass3 = std::abs(d3.value - want3) <= 0.05;
    out.push_back(report("boxdim-cantor3", pass3,
                         "estimate " + std::to_string(d3.value) + " +- " +
                             std::to_string(d3.stderr_),
                         "within 0.05 of log2/log3 = 0.630930"));

    auto ptsE = e2_points(20);
    std::vector<Rational> eps2;
    for (int k = 6; k <= 14; ++k) eps2.push_back(pow2(-k));
    DimEstimate dE = box_count_dim(ptsE, eps2);
    double wantE = std::log((1.0 + std::sqrt(5.0)) / 2.0) / std::log(2.0);
    bool passE = std::abs(dE.value - wantE) <= 0.05;
    out.push_back(report("boxdim-e2", passE,
                         "estimate " + std::to_string(dE.value) + " +- " +
                             std::to_string(dE.stderr_),
                         "within 0.05 of log(golden)/log2 = 0.694242"));
    return out;
}

// ---- two-sided difference constants ------------------------------------------------

std::vector<VerificationReport> suite_bilipschitz(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int n = b.level.value_or(1);
    const int order = b.order.value_or(60);
    const int want_pairs = b.count.value_or(100);

    // canonical distinct sequences (dedupe by tau)
    std::vector<TailSpec> specs;
    std::set<Rational> seen;
    for (const TailSpec& s : min_two_specs(b.max_weight.value_or(8)))
        if (seen.insert(tau(s)).second) specs.push_back(s);

    int done = 0, violations = 0;
    std::string bad;
    for (std::size_t i = 0; i < specs.size() && done < want_pairs; ++i) {
        for (std::size_t j = i + 1; j < specs.size() && done < want_pairs; ++j) {
            Ordering ord = lex_compare(specs[i], specs[j]);
            const TailSpec& k = ord == Ordering::Greater ? specs[i] : specs[j];
            const TailSpec& l = ord == Ordering::Greater ? specs[j] : specs[i];
            BiLipschitzResult res = bilipschitz_ratio(n, k, l, order);
            ++done;
            if (!(res.ratio.lo >= res.c1.hi && res.ratio.hi <= res.c2.lo)) {
                ++violations;
                if (bad.empty())
                    bad = k.str() + " vs " + l.str() + ": ratio " +
                          format_enclosure(res.ratio, 8);
            }
        }
    }
    out.push_back(report(
        "bilipschitz n=" + std::to_string(n), violations == 0 && done == want_pairs,
        violations == 0 ? std::to_string(done) + " pairs inside [c1, c2]"
                        : std::to_string(violations) + " violations; first: " + bad,
        "c1 = min{7/4 - zeta(2), 1/3}, c2 = n e^{2n}"));
    return out;
}

// ---- preimage round trips -----------------------------------------------------------

std::vector<VerificationReport> suite_preimage(const VerifyBudgets& b) {
    std::vector<VerificationReport> out;
    const int n = b.level.value_or(1);
    const int depth = b.depth.value_or(24);
    const int order = b.order.value_or(60);
    const Rational tol = pow2(-22);
    const Rational rt_tol = rat_1e(4);
    const std::vector<Rational> targets{
        make_rational(23, 20), make_rational(13, 10), make_rational(29, 20),
        make_rational(8, 5),   make_rational(7, 4),   make_rational(19, 10),
        make_rational(41, 20), make_rational(11, 5),  make_rational(47, 20),
        make_rational(5, 2)};
    int ok = 0;
    std::string bad;
    for (const Rational& y0 : targets) {
        PreimageResult res = fn_preimage(n, y0, tol, depth, order);
        Enclosure f = fn_enclosure(n, res.x_interval.hi, depth, order);
        bool pass = res.met_tolerance && f.hi >= y0 - rt_tol && f.lo <= y0 + rt_tol;
        if (pass)
            ++ok;
        else if (bad.empty())
            bad = "y0=" + to_fraction_string(y0) + " -> x=" +
                  to_fraction_string(res.x_interval.hi) + ", F " + format_enclosure(f, 8);
    }
    out.push_back(report("preimage n=" + std::to_string(n),
                         ok == static_cast<int>(targets.size()),
                         std::to_string(ok) + "/" + std::to_string(targets.size()) +
                             " round trips" + (bad.empty() ? "" : "; first failure: " + bad),
                         "bracket width <= 2^-22, |F(x) - y0| <= 1e-4"));
    return out;
}

using SuiteFn = std::function<std::vector<VerificationReport>(const VerifyBudgets&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"oracle-tn", suite_oracle_tn},
        {"limit-ones", suite_limit_ones},
        {"gn-identities", suite_gn_identities},
        {"fixed-point", suite_fixed_point},
        {"order-t2", suite_order_t2},
        {"lemma-exp", suite_lemma_exp},
        {"lemma-del", suite_lemma_del},
        {"lemma-leq", suite_lemma_leq},
        {"jump-mass", suite_jump_mass},
        {"decomposition", suite_decomposition},
        {"moran", suite_moran},
        {"boxdim", suite_boxdim},
        {"bilipschitz", suite_bilipschitz},
        {"preimage", suite_preimage},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    names.push_back("all");
    return names;
}

bool is_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& [n, fn] : registry())
        if (n == name) return true;
    return false;
}

std::vector<VerificationReport> run_suite(const std::string& name,
                                          const VerifyBudgets& budgets) {
    if (name == "all") {
        std::vector<VerificationReport> out;
        for (const auto& [n, fn] : registry()) {
            auto r = fn(budgets);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(budgets);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status != CheckStatus::Pass) return false;
    return true;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "inconclusive";
    }
}

}  // namespace tnd
