#include "tndeform/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tnd {

CertifiedSeries::CertifiedSeries(std::vector<Rational> coeffs, Rational tail_bound)
    : coeffs_(std::move(coeffs)), tail_(std::move(tail_bound)) {
    if (coeffs_.empty()) throw std::invalid_argument("CertifiedSeries: no coefficients");
    for (const auto& c : coeffs_)
        if (c < 0) throw std::invalid_argument("CertifiedSeries: negative coefficient");
    if (tail_ < 0) throw std::invalid_argument("CertifiedSeries: negative tail bound");
}

CertifiedSeries poly_tn(int n) {
    if (n < 1) throw std::invalid_argument("poly_tn: n < 1");
    std::vector<Rational> c(n + 1, Rational(1));
    c[0] = 0;
    return {std::move(c), Rational(0)};
}

namespace {

// Sliding-window coefficient recurrences share this helper:
// window(t) = Σ_{l=max(t-n,0)}^{t-1} c_l.
Rational window_sum(const std::vector<Rational>& c, int t, int n) {
    Rational w = 0;
    for (int l = std::max(t - n, 0); l < t; ++l) w += c[l];
    return w;
}

}  // namespace

CertifiedSeries series_en(int n, int order) {
    if (n < 1) throw std::invalid_argument("series_en: n < 1");
    if (order < n + 1) throw std::invalid_argument("series_en: order < n+1");
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (int t = 1; t <= order; ++t)
        c[t] = window_sum(c, t, n) / static_cast<unsigned long>(t);
    // tail: coefficients past M shrink by at least q = n/(M+1) per window of n
    Rational bmax = 0;
    for (int l = order - n + 1; l <= order; ++l) bmax = std::max(bmax, c[l]);
    Rational q = make_rational(n, order + 1);
    Rational tail = Rational(n) * bmax * q / (1 - q);
    return {std::move(c), std::move(tail)};
}

CertifiedSeries series_gn(int n, int order) {
    if (n < 1) throw std::invalid_argument("series_gn: n < 1");
    if (order < n + 1) throw std::invalid_argument("series_gn: order < n+1");
    std::vector<Rational> a(order + 1);
    a[0] = 1;
    for (int t = 1; t <= order; ++t) {
        // a_t = window / (t (t+2))
        a[t] = window_sum(a, t, n) /
               static_cast<unsigned long>(static_cast<unsigned long>(t) * (t + 2));
    }
    Rational tail = make_rational(n, Integer(order + 2 - n) * (order + 1) * (order + 2));
    return {std::move(a), std::move(tail)};
}

CertifiedSeries series_delta(int n, int order) {
    CertifiedSeries en = series_en(n, order);
    std::vector<Rational> c = en.coeffs();
    for (int m = 0; m <= n; ++m) c[m] -= 1;  // e_n has coefficient 1 through degree n
    return {std::move(c), en.tail_bound()};
}

CertifiedSeries op_mul_one_plus_tn(const CertifiedSeries& s, int n) {
    if (n < 1) throw std::invalid_argument("op_mul_one_plus_tn: n < 1");
    const int M = s.order();
    const auto& c = s.coeffs();
    std::vector<Rational> out(M + 1);
    for (int m = 0; m <= M; ++m) {
        Rational acc = 0;
        for (int j = std::max(m - n, 0); j <= m; ++j) acc += c[j];
        out[m] = std::move(acc);
    }
    // spilled degrees M+1 .. M+n land on [0,1] below u^{M+1}
    Rational spill = 0;
    for (int m = M + 1; m <= M + n; ++m)
        for (int j = std::max(m - n, 0); j <= M; ++j) spill += c[j];
    Rational tail = Rational(n + 1) * s.tail_bound() + spill;
    return {std::move(out), std::move(tail)};
}

CertifiedSeries op_mul_affine(const CertifiedSeries& s, const Rational& scale) {
    if (scale < 0) throw std::invalid_argument("op_mul_affine: negative scale");
    const int M = s.order();
    const auto& c = s.coeffs();
    std::vector<Rational> out(M + 1);
    out[0] = c[0];
    for (int m = 1; m <= M; ++m) out[m] = c[m] + scale * c[m - 1];
    Rational tail = (1 + scale) * s.tail_bound() + scale * c[M];
    return {std::move(out), std::move(tail)};
}

CertifiedSeries op_integrate(const CertifiedSeries& s) {
    const int M = s.order();
    const auto& c = s.coeffs();
    std::vector<Rational> out(M + 1);
    for (int m = 0; m <= M; ++m) out[m] = c[m] / static_cast<unsigned long>(m + 1);
    Rational tail = s.tail_bound() / static_cast<unsigned long>(M + 2);
    return {std::move(out), std::move(tail)};
}

Enclosure eval_at_one(const CertifiedSeries& s) {
    Rational sum = 0;
    for (const auto& c : s.coeffs()) sum += c;
    return {sum, sum + s.tail_bound()};
}

Enclosure eval_at(const CertifiedSeries& s, const Rational& u) {
    if (u < 0 || u > 1) throw std::invalid_argument("eval_at: u outside [0,1]");
    const auto& c = s.coeffs();
    Rational p = 0;
    for (int m = s.order(); m >= 0; --m) p = p * u + c[m];
    Rational upow = rational_pow(u, static_cast<unsigned long>(s.order() + 1));
    return {p, p + s.tail_bound() * upow};
}

CertifiedSeries seed_series(Seed seed, int n, int order) {
    if (seed == Seed::One) {
        std::vector<Rational> c(order + 1);
        c[0] = 1;
        return {std::move(c), Rational(0)};
    }
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, CertifiedSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(seed), n, order);
    auto it = cache.find(key);
    if (it == cache.end()) {
        CertifiedSeries s = seed == Seed::En    ? series_en(n, order)
                            : seed == Seed::Gn ? series_gn(n, order)
                                               : series_delta(n, order);
        it = cache.emplace(key, std::move(s)).first;
    }
    return it->second;
}

Enclosure run_pipeline(const PipelinePlan& plan, int order) {
    if (plan.level < 1) throw std::invalid_argument("run_pipeline: level < 1");
    if (plan.steps < 0) throw std::invalid_argument("run_pipeline: negative steps");
    if (order < plan.level + 1) throw std::invalid_argument("run_pipeline: order too small");
    for (std::size_t i = 0; i < plan.factor_ends.size(); ++i) {
        int f = plan.factor_ends[i];
        if (f < 1 || f > plan.steps)
            throw std::invalid_argument("run_pipeline: factor end out of range");
        if (i > 0 && plan.factor_ends[i - 1] >= f)
            throw std::invalid_argument("run_pipeline: factor ends not increasing");
    }
    CertifiedSeries s = seed_series(plan.seed, plan.level, order);
    auto next_factor = plan.factor_ends.rbegin();
    for (int i = plan.steps; i >= 1; --i) {
        if (next_factor != plan.factor_ends.rend() && *next_factor == i) {
            s = op_mul_one_plus_tn(s, plan.level);
            ++next_factor;
        }
        s = op_integrate(s);
    }
    return eval_at_one(s);
}

Enclosure run_affine_pipeline(int steps, const Rational& scale, int monomial_degree,
                              int order) {
    if (steps < 0) throw std::invalid_argument("run_affine_pipeline: negative steps");
    if (monomial_degree < 0 || monomial_degree > order)
        throw std::invalid_argument("run_affine_pipeline: bad monomial degree");
    std::vector<Rational> c(order + 1);
    c[monomial_degree] = 1;
    CertifiedSeries s(std::move(c), Rational(0));
    for (int i = 0; i < steps; ++i) s = op_integrate(op_mul_affine(s, scale));
    return eval_at_one(s);
}

std::string dump_json(const CertifiedSeries& s) {
    nlohmann::ordered_json j;
    auto& coeffs = j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_fraction_string(c));
    j["tail_bound"] = to_fraction_string(s.tail_bound());
    return j.dump();
}

}  // namespace tnd
