#pragma once

#include "samf/image.hpp"

namespace samf {

inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimC1 = 0.01 * 0.01;
inline constexpr double kSsimC2 = 0.03 * 0.03;

/// Per-pixel SSIM with Gaussian weighting (sigma 1.5, truncated to
/// `window`), dynamic range 1 and mirror borders. Values lie in [-1, 1].
GrayImage ssim_map(const GrayImage& x, const GrayImage& y, int window = 11);

}  // namespace samf
