#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "samf/image.hpp"

namespace samf {

/// BT.601 luminance, clamped to [0,1].
GrayImage to_gray(const ColorImage& img);

/// Half-sample symmetric reflection of `i` into [0, n): ... b a | a b c | c b ...
int mirror_index(int i, int n);

/// Normalized 1-D Gaussian taps of length `window`, centred.
/// Throws ParameterError unless window is odd and sigma > 0.
std::vector<double> gaussian_kernel(int window, double sigma);

/// Separable Gaussian convolution truncated to window x window, mirror borders.
GrayImage gaussian_blur(const GrayImage& img, int window, double sigma);

/// Separable convolution of rows then columns with the same symmetric taps.
GrayImage convolve_separable(const GrayImage& img, const std::vector<double>& taps);

/// Bin index floor(v * 255 + 0.5) with v clamped to [0,1].
int intensity_bin(double v);

using Histogram256 = std::array<std::int64_t, 256>;
Histogram256 histogram256(const GrayImage& img);

enum class Connectivity { Four = 4, Eight = 8 };

struct Components {
  Size size;
  /// 0 for unset pixels, 1..count for set pixels.
  std::vector<int> labels;
  /// areas[k - 1] is the area of region k.
  std::vector<std::int64_t> areas;

  int count() const { return static_cast<int>(areas.size()); }
};

/// Labels the set pixels of `mask`; labels follow raster order of each
/// region's first pixel.
Components connected_components(const Mask& mask, Connectivity connectivity);

/// Labels every pixel: maximal connected runs of equal value, both polarities.
/// Labels start at 1 and follow raster order of first pixels.
Components label_uniform_regions(const Mask& mask, Connectivity connectivity);

/// Exact Euclidean distance from every pixel to the nearest boundary pixel
/// of `mask`. A boundary pixel has a 4-neighbour of the other value. When the
/// mask has no boundary, every distance is +infinity.
GrayImage distance_to_boundary(const Mask& mask);

}  // namespace samf
