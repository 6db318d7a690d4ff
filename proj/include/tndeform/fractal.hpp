#pragma once

#include "tndeform/composition.hpp"
#include "tndeform/enclosure.hpp"

#include <vector>

namespace tnd {

// Iterated function system on [0,1]: either an explicit list of similitudes
// x -> ratio*x + offset, or the geometric family x -> b^{-k}(1 + x) for
// k >= start_exponent. Both kinds satisfy the open-set condition on (0,1)
// for the instances in scope.
class SimilitudeFamily {
public:
    struct Map {
        Rational ratio;   // in (0,1)
        Rational offset;
    };

    static SimilitudeFamily finite(std::vector<Map> maps);
    static SimilitudeFamily geometric(int base, int start_exponent);

    bool is_geometric() const { return geometric_; }
    const std::vector<Map>& maps() const { return maps_; }  // finite only
    int base() const { return base_; }
    int start_exponent() const { return start_; }

    // x -> b^{-k}(1+x) for the geometric family
    Rational apply_geometric(int k, const Rational& x) const;

    // Σ ratio_i^s (geometric families summed in closed form), s > 0.
    Enclosure ratio_power_sum(const Rational& s, unsigned min_bits) const;

private:
    SimilitudeFamily() = default;
    bool geometric_ = false;
    std::vector<Map> maps_;
    int base_ = 0, start_ = 0;
};

// Bisection enclosure of the similarity dimension: the unique s with
// Σ ratio_i^s = 1. Width <= tol unless the precision ceiling is hit first.
Enclosure moran_solve(const SimilitudeFamily& family, const Rational& tol);

// All Σ_{i<=depth} a_i/m^i with digits a_i in {0, m-1}, sorted. 2^depth points.
std::vector<Rational> cantor_points(int m, int depth);

// Finite truncations Σ_{j<=r} 2^{-K_j} with parts k_i >= 2 and K_r <= max_weight,
// sorted.
std::vector<Rational> e2_points(int max_weight);

struct DimEstimate {
    double value = 0;
    double stderr_ = 0;
    double eps_min = 0, eps_max = 0;  // regression range
};

// Least-squares slope of log N(eps) against log(1/eps); boxes are the
// half-open intervals [i*eps, (i+1)*eps).
DimEstimate box_count_dim(const std::vector<Rational>& points,
                          const std::vector<Rational>& eps_schedule);

// Export helpers (External Interfaces): CSV of "num/den" points, JSON of an
// estimate.
std::string points_csv(const std::vector<Rational>& points);
std::string dim_estimate_json(const DimEstimate& e);

struct ImageSamplePair {
    TailSpec upper, lower;     // upper above lower in the order
    Rational cantor_upper, cantor_lower;
    Enclosure h_diff;          // H_n difference over [tau(lower), tau(upper))
    Enclosure ratio;           // h_diff / (cantor_upper - cantor_lower)
    int norm_weight = 0;       // K_{r0} at the first difference
    Enclosure normalized;      // h_diff * (n+2)^{K_{r0}}
};

struct ImageSampleReport {
    std::vector<ImageSamplePair> pairs;
    Enclosure min_ratio, max_ratio;
};

// Sampled two-sided distortion of the correspondence between the level-n
// Cantor difference set and the saltus image (pairs with zero distance are
// skipped).
ImageSampleReport hn_image_sample(int n, int weight_cutoff, int order);

// Point of the Cantor difference set attached to an index sequence:
// Σ_j (n+1)/(n+2)^{K_j} over the whole sequence, in closed form.
Rational cantor_correspondence(int n, const TailSpec& t);

}  // namespace tnd
