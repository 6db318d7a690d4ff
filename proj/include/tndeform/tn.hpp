#pragma once

#include "tndeform/composition.hpp"
#include "tndeform/rational.hpp"

#include <vector>

namespace tnd {

// Deformation level n >= 1 together with the index composition.
struct DeformKey {
    int level = 1;
    Composition composition;
};

// Exact value of the deformation integral, via the nested-sum dynamic
// program: T_n = Σ over chains b_1 >= ... >= b_r >= 1 with b_j - b_{j+1} <= n
// and b_r <= n+1 of Π_j b_j^{-k_j}. Rejects n <= 0 and the empty composition.
// Must agree with tn_bruteforce everywhere both run (tested exhaustively).
Rational tn_exact(const DeformKey& key);

// Independent oracle: direct expansion into (n+1)^r monomials,
// Σ over (a_1..a_r) in {0..n}^r of Π_j (1 + a_j + ... + a_r)^{-k_j}.
// Guard: (n+1)^r <= 10^7. The empty composition evaluates to 1.
Rational tn_bruteforce(const DeformKey& key);

// T_n(base), T_n(base ++ c), T_n(base ++ c,c), ... (`steps` values).
// The returned sequence is strictly increasing.
std::vector<Rational> tn_monotone_table(int n, const Composition& base,
                                        int extension_part, int steps);

}  // namespace tnd
