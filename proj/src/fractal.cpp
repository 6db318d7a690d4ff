#include "tndeform/fractal.hpp"

#include "tndeform/maps.hpp"
#include "tndeform/realfun.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tnd {

SimilitudeFamily SimilitudeFamily::finite(std::vector<Map> maps) {
    if (maps.empty()) throw std::invalid_argument("SimilitudeFamily: no maps");
    for (const auto& m : maps)
        if (m.ratio <= 0 || m.ratio >= 1)
            throw std::invalid_argument("SimilitudeFamily: ratio outside (0,1)");
    SimilitudeFamily f;
    f.maps_ = std::move(maps);
    return f;
}

SimilitudeFamily SimilitudeFamily::geometric(int base, int start_exponent) {
    if (base < 2) throw std::invalid_argument("SimilitudeFamily: base < 2");
    if (start_exponent < 1)
        throw std::invalid_argument("SimilitudeFamily: start exponent < 1");
    SimilitudeFamily f;
    f.geometric_ = true;
    f.base_ = base;
    f.start_ = start_exponent;
    return f;
}

Rational SimilitudeFamily::apply_geometric(int k, const Rational& x) const {
    if (!geometric_) throw std::logic_error("apply_geometric: finite family");
    Rational scale = inv_pow(static_cast<unsigned long>(base_),
                             static_cast<unsigned long>(k));
    return scale * (1 + x);
}

Enclosure SimilitudeFamily::ratio_power_sum(const Rational& s, unsigned min_bits) const {
    if (s <= 0) throw std::domain_error("ratio_power_sum: s <= 0");
    if (!geometric_) {
        Enclosure sum;
        for (const auto& m : maps_) sum = sum + pow_enclosure(m.ratio, s, min_bits);
        return sum;
    }
    // Σ_{k>=k0} b^{-ks} = B^{k0} / (1 - B) with B = b^{-s}
    Enclosure B = pow_enclosure(make_rational(1, base_), s, min_bits);
    if (B.hi >= 1) throw std::domain_error("ratio_power_sum: precision too low");
    Enclosure Bk{rational_pow(B.lo, static_cast<unsigned long>(start_)),
                 rational_pow(B.hi, static_cast<unsigned long>(start_))};
    Enclosure denom{1 - B.hi, 1 - B.lo};
    return Bk * reciprocal(denom);
}

Enclosure moran_solve(const SimilitudeFamily& family, const Rational& tol) {
    if (tol <= 0) throw std::invalid_argument("moran_solve: tol <= 0");
    // Σ r^s is strictly decreasing in s; bracket the root then bisect.
    Rational lo = make_rational(1, 64);
    Rational hi = 1;
    unsigned bits = 128;
    auto sign_at = [&](const Rational& s) -> int {
        // +1 when Σ r^s certified > 1, -1 when < 1, 0 undecided
        for (unsigned b = bits; b <= 1024; b *= 2) {
            Enclosure v = family.ratio_power_sum(s, b);
            if (v.lo > 1) return 1;
            if (v.hi < 1) return -1;
        }
        return 0;
    };
    while (sign_at(lo) < 0) lo /= 2;
    while (sign_at(hi) > 0) {
        hi *= 2;
        if (hi > 64) throw std::domain_error("moran_solve: no root below s = 64");
    }
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        int sg = sign_at(mid);
        if (sg == 0) break;  // precision ceiling; current bracket is still valid
        (sg > 0 ? lo : hi) = mid;
    }
    return {lo, hi};
}

std::vector<Rational> cantor_points(int m, int depth) {
    if (m < 3) throw std::invalid_argument("cantor_points: m < 3");
    if (depth < 1) throw std::invalid_argument("cantor_points: depth < 1");
    if (depth > 20) throw std::invalid_argument("cantor_points: size guard (depth > 20)");
    std::vector<Rational> pts{Rational(0)};
    Rational digit = m - 1;
    for (int i = 1; i <= depth; ++i) {
        Rational place = digit * inv_pow(static_cast<unsigned long>(m),
                                         static_cast<unsigned long>(i));
        std::size_t sz = pts.size();
        for (std::size_t j = 0; j < sz; ++j) pts.push_back(pts[j] + place);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<Rational> e2_points(int max_weight) {
    if (max_weight < 2) throw std::invalid_argument("e2_points: max_weight < 2");
    if (max_weight > 30) throw std::invalid_argument("e2_points: size guard");
    // depth-first over compositions with parts >= 2, accumulating Σ 2^{-K_j}
    std::vector<Rational> pts;
    struct Frame {
        int weight;
        Rational value;
    };
    std::vector<Frame> stack{{0, Rational(0)}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (int part = 2; f.weight + part <= max_weight; ++part) {
            Frame g{f.weight + part, f.value + pow2(-(f.weight + part))};
            pts.push_back(g.value);
            stack.push_back(g);
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

DimEstimate box_count_dim(const std::vector<Rational>& points,
                          const std::vector<Rational>& eps_schedule) {
    if (points.empty()) throw std::invalid_argument("box_count_dim: no points");
    if (eps_schedule.size() < 2)
        throw std::invalid_argument("box_count_dim: need at least 2 scales");
    std::vector<double> xs, ys;
    Rational eps_min = eps_schedule.front(), eps_max = eps_schedule.front();
    for (const Rational& eps : eps_schedule) {
        if (eps <= 0 || eps > 1)
            throw std::invalid_argument("box_count_dim: eps outside (0,1]");
        eps_min = std::min(eps_min, eps);
        eps_max = std::max(eps_max, eps);
        std::set<Integer> boxes;
        for (const Rational& p : points) {
            Integer idx;
            Integer num = p.get_num() * eps.get_den();
            Integer den = p.get_den() * eps.get_num();
            mpz_fdiv_q(idx.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            boxes.insert(idx);
        }
        xs.push_back(std::log(1.0 / to_double(eps)));
        ys.push_back(std::log(static_cast<double>(boxes.size())));
    }
    bool all_equal = std::all_of(ys.begin(), ys.end(),
                                 [&](double y) { return y == ys.front(); });
    if (all_equal) throw std::domain_error("box_count_dim: degenerate regression");

    const std::size_t n = xs.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    DimEstimate est;
    est.value = sxy / sxx;
    double resid = syy - est.value * sxy;
    if (resid < 0) resid = 0;
    est.stderr_ = n > 2 ? std::sqrt(resid / ((n - 2) * sxx)) : 0.0;
    est.eps_min = to_double(eps_min);
    est.eps_max = to_double(eps_max);
    return est;
}

std::string points_csv(const std::vector<Rational>& points) {
    std::string out = "point\n";
    for (const auto& p : points) out += to_fraction_string(p) + "\n";
    return out;
}

std::string dim_estimate_json(const DimEstimate& e) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "{\"value\": %.12g, \"stderr\": %.12g, \"eps_range\": [%.12g, %.12g]}",
                  e.value, e.stderr_, e.eps_min, e.eps_max);
    return buf;
}

Rational cantor_correspondence(int n, const TailSpec& t) {
    const unsigned long b = static_cast<unsigned long>(n + 2);
    Rational sum = 0;
    int acc = 0;
    for (int p : t.prefix.parts()) {
        acc += p;
        sum += Rational(n + 1) * inv_pow(b, static_cast<unsigned long>(acc));
    }
    Rational tail_scale = inv_pow(b, static_cast<unsigned long>(acc));
    if (t.tail == Tail::Ones) return sum + tail_scale;          // (n+1)Σ(n+2)^{-m} telescopes
    return sum + tail_scale / static_cast<unsigned long>(n + 3);  // twos-spaced tail
}

ImageSampleReport hn_image_sample(int n, int weight_cutoff, int order) {
    const SiteTable& table = site_table(n, weight_cutoff, order);
    // deterministic sample: all specs with prefix weight <= 4, both tails
    std::vector<TailSpec> specs;
    specs.push_back(TailSpec{Composition(), Tail::Ones});
    specs.push_back(TailSpec{Composition(), Tail::Twos});
    for (const Composition& c : enumerate_compositions(4)) {
        specs.push_back(TailSpec{c, Tail::Ones});
        specs.push_back(TailSpec{c, Tail::Twos});
    }
    ImageSampleReport report;
    bool have = false;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (std::size_t j = i + 1; j < specs.size(); ++j) {
            Ordering ord = lex_compare(specs[i], specs[j]);
            if (ord == Ordering::Equal) continue;  // zero distance, skipped
            const TailSpec& up = ord == Ordering::Greater ? specs[i] : specs[j];
            const TailSpec& dn = ord == Ordering::Greater ? specs[j] : specs[i];
            ImageSamplePair pair;
            pair.upper = up;
            pair.lower = dn;
            pair.cantor_upper = cantor_correspondence(n, up);
            pair.cantor_lower = cantor_correspondence(n, dn);
            pair.h_diff = hn_window_sum(table, tau(dn), tau(up));
            Rational cd = pair.cantor_upper - pair.cantor_lower;
            pair.ratio = pair.h_diff / cd;
            int r0 = 0;
            while (up.part_at(r0) == dn.part_at(r0)) ++r0;
            long norm = 0;
            for (int q = 0; q <= r0; ++q) norm += up.part_at(q);
            pair.norm_weight = static_cast<int>(norm);
            pair.normalized =
                rational_pow(Rational(n + 2), static_cast<unsigned long>(norm)) *
                pair.h_diff;
            if (!have) {
                report.min_ratio = report.max_ratio = pair.ratio;
                have = true;
            } else {
                if (pair.ratio.midpoint() < report.min_ratio.midpoint())
                    report.min_ratio = pair.ratio;
                if (pair.ratio.midpoint() > report.max_ratio.midpoint())
                    report.max_ratio = pair.ratio;
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

}  // namespace tnd
