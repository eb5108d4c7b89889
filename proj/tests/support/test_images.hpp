#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "samf/image.hpp"

namespace samf::testing {

// Deterministic generators for property-style tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  GrayImage image(Size size, double lo = 0.0, double hi = 1.0) {
    GrayImage img(size);
    for (double& v : img.pixels()) v = uniform(lo, hi);
    return img;
  }

  // Values on the 8-bit grid, as after decoding a file.
  GrayImage image8(Size size) {
    GrayImage img(size);
    for (double& v : img.pixels()) v = integer(0, 255) / 255.0;
    return img;
  }

  ColorImage color8(Size size) { return ColorImage(image8(size), image8(size), image8(size)); }

  Mask mask(Size size, double density = 0.5) {
    Mask m(size);
    for (std::size_t i = 0; i < m.pixel_count(); ++i) m[i] = uniform() < density ? 1 : 0;
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

inline double max_abs_diff(const GrayImage& a, const GrayImage& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.pixel_count(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace samf::testing
