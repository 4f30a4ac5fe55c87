#pragma once

#include <cstdint>

namespace randcliff {

/// h(p) = -p log2 p - (1-p) log2(1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

/// Achievable-rate threshold 1 - h(delta) - delta*log2(3) for delta in [0,1].
double gv_rate_bound(double delta);

/// log2 C(n, k); -inf outside 0 <= k <= n. Exact to double precision via
/// lgamma.
double log2_binomial(uint64_t n, int64_t k);

/// log2(2^a + 2^b), safe for very negative inputs.
double log2_add_exp2(double a, double b);

} // namespace randcliff
