#pragma once

#include "samf/image.hpp"

namespace samf {

/// Global-contrast visual saliency: each pixel scores the summed absolute
/// intensity-bin difference to every other pixel, min-max normalized to
/// [0,1]. Constant images give an all-zero map.
///
/// Normalized values are rounded to multiples of 2^-24 so that the weight
/// 0.5 + (S_1 - S_2) / 2 and its complement are exact in double precision.
GrayImage vsm(const GrayImage& img);

/// W_F = 0.5 + (S_1 - S_2) / 2.
GrayImage saliency_weight(const GrayImage& s1, const GrayImage& s2);

/// PF = W_F * I_1 + (1 - W_F) * I_2, clamped to [min(I_1, I_2), max(I_1, I_2)].
GrayImage prefuse(const GrayImage& i1, const GrayImage& i2, const GrayImage& wf);

}  // namespace samf
