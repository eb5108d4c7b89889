#include "samf/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "samf/imgproc.hpp"

namespace samf {

namespace {

constexpr double kSaliencyGrid = 16777216.0;  // 2^24

}  // namespace

GrayImage vsm(const GrayImage& img) {
  const Histogram256 hist = histogram256(img);

  // Raw contrast per bin: sum_j H(j) * |i - j|. Integer valued.
  std::array<double, 256> contrast{};
  for (int i = 0; i < 256; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < 256; ++j) acc += hist[static_cast<std::size_t>(j)] * std::abs(i - j);
    contrast[static_cast<std::size_t>(i)] = static_cast<double>(acc);
  }

  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (int i = 0; i < 256; ++i) {
    if (hist[static_cast<std::size_t>(i)] == 0) continue;
    const double c = contrast[static_cast<std::size_t>(i)];
    lo = first ? c : std::min(lo, c);
    hi = first ? c : std::max(hi, c);
    first = false;
  }

  GrayImage out(img.size(), 0.0);
  if (hi == lo) return out;

  std::array<double, 256> normalized{};
  for (int i = 0; i < 256; ++i) {
    const double n = (contrast[static_cast<std::size_t>(i)] - lo) / (hi - lo);
    normalized[static_cast<std::size_t>(i)] = std::clamp(std::round(n * kSaliencyGrid) / kSaliencyGrid, 0.0, 1.0);
  }
  const auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t p = 0; p < src.size(); ++p) dst[p] = normalized[static_cast<std::size_t>(intensity_bin(src[p]))];
  return out;
}

GrayImage saliency_weight(const GrayImage& s1, const GrayImage& s2) {
  require_same_size(s1.size(), s2.size(), "saliency_weight");
  GrayImage wf(s1.size());
  for (std::size_t i = 0; i < wf.pixel_count(); ++i) wf[i] = 0.5 + (s1[i] - s2[i]) / 2.0;
  return wf;
}

GrayImage prefuse(const GrayImage& i1, const GrayImage& i2, const GrayImage& wf) {
  require_same_size(i1.size(), i2.size(), "prefuse sources");
  require_same_size(i1.size(), wf.size(), "prefuse weight");
  GrayImage pf(i1.size());
  for (std::size_t i = 0; i < pf.pixel_count(); ++i) {
    const double a = i1[i];
    const double b = i2[i];
    const double mix = wf[i] * a + (1.0 - wf[i]) * b;
    pf[i] = std::clamp(mix, std::min(a, b), std::max(a, b));
  }
  return pf;
}

}  // namespace samf
