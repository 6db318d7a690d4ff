#pragma once

#include "tndeform/enclosure.hpp"
#include "tndeform/rational.hpp"

#include <string>
#include <vector>

namespace tnd {

// Truncated power series on [0,1] with a certified tail.
//
// A CertifiedSeries of order M represents a function f on [0,1] whose true
// power-series coefficients are all nonnegative, with
//
//     0 <= f(u) - Σ_{m<=M} c_m u^m <= tail_bound * u^{M+1}   for u in [0,1].
//
// Both stored coefficients and the tail bound are exact rationals and stay
// nonnegative through every operator; tail bounds are only ever rounded up.
class CertifiedSeries {
public:
    CertifiedSeries(std::vector<Rational> coeffs, Rational tail_bound);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& tail_bound() const { return tail_; }

private:
    std::vector<Rational> coeffs_;  // c_0 .. c_M
    Rational tail_;
};

// t_n(x) = x + x^2 + ... + x^n, exact (tail 0).
CertifiedSeries poly_tn(int n);

// exp(u + u²/2 + ... + uⁿ/n) to the requested order (>= n+1), coefficients
// from the recurrence (m+1)c_{m+1} = Σ_{l=max(m+1-n,0)}^{m} c_l. The tail
// bound comes from the same recurrence: past the truncation order each new
// coefficient is at most q = n/(M+1) times the maximum of the previous n,
// so the tail mass is at most n·B·q/(1-q) with B the max of the last n
// stored coefficients.
CertifiedSeries series_en(int n, int order);

// The twos-tail generating function: a_0 = 1,
// a_{m+1} = (Σ_{l=max(m+1-n,0)}^{m} a_l) / ((m+1)(m+3)).
// Tail from the telescoped coefficient envelope:
// Σ_{m>M} 2n/(m(m+1)(m+2)(m+1-n)) <= n/((M+2-n)(M+1)(M+2)).
CertifiedSeries series_gn(int n, int order);

// e_n - (1 + t_n): zero through degree n, then e_n's coefficients.
CertifiedSeries series_delta(int n, int order);

// (1 + t_n(u)) * s, truncated at s.order(); spilled coefficients and
// (n+1)*tail are absorbed into the new tail bound.
CertifiedSeries op_mul_one_plus_tn(const CertifiedSeries& s, int n);

// (1 + scale*u) * s for scale >= 0; used by the affine product bounds.
CertifiedSeries op_mul_affine(const CertifiedSeries& s, const Rational& scale);

// u -> ∫_0^1 s(ux) dx:  c_m -> c_m/(m+1), tail -> tail/(M+2).
CertifiedSeries op_integrate(const CertifiedSeries& s);

Enclosure eval_at_one(const CertifiedSeries& s);
Enclosure eval_at(const CertifiedSeries& s, const Rational& u);  // u in [0,1]

enum class Seed { One, En, Gn, DeltaN };

// A nested-integral evaluation plan: `steps` integration steps, with a
// (1 + t_n) factor applied before integrating at each position listed in
// factor_ends (positions counted from 1, applied innermost-first).
struct PipelinePlan {
    int level = 1;                 // n
    int steps = 0;                 // number of integrations
    std::vector<int> factor_ends;  // strictly increasing, within [1, steps]
    Seed seed = Seed::One;
};

// Starting from the seed series, applies, for i = steps down to 1:
// op_mul_one_plus_tn if i is a factor end, then op_integrate; finally
// eval_at_one. Encloses the corresponding iterated integral.
Enclosure run_pipeline(const PipelinePlan& plan, int order);

// ∫ over `steps` variables of Π_i [1 + scale·x_1...x_i] (x_1...x_steps)^m,
// exact when order >= m + steps (the tail stays 0).
Enclosure run_affine_pipeline(int steps, const Rational& scale,
                              int monomial_degree, int order);

// Memoized seed constructors; threads share an idempotent cache.
CertifiedSeries seed_series(Seed seed, int n, int order);

// JSON dump: {"coeffs": ["num/den", ...], "tail_bound": "num/den"}.
std::string dump_json(const CertifiedSeries& s);

}  // namespace tnd
