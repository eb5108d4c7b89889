#pragma once

#include "samf/config.hpp"
#include "samf/image.hpp"

namespace samf {

/// Domain-transform recursive filter.
///
/// Smooths `signal` along the transformed domain of `guide`: each of
/// `iterations` rounds runs a causal + anti-causal first-order recursion
/// over every row, then over every column. The feedback at sample k is
/// a^d_k with a = exp(-sqrt(2) / sigma_H_i) and
/// d_k = 1 + (sigma_s / sigma_r) * |guide[k] - guide[k-1]|; sigma_H_i
/// shrinks geometrically across rounds so the stacked passes approximate
/// a kernel of standard deviation sigma_s.
///
/// Every output is a convex combination of inputs, so the result stays
/// within [min(signal), max(signal)]. The signal range is not assumed.
GrayImage recursive_filter(const GrayImage& signal, const GrayImage& guide, const RfParams& params);

/// sigma_H for 0-based round `i` of `n`.
double rf_round_sigma(double sigma_s, int i, int n);

}  // namespace samf
