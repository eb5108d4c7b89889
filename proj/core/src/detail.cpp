#include "samf/detail.hpp"

#include <cmath>

#include "samf/imgproc.hpp"

namespace samf {

GrayImage detail_layers(const GrayImage& img, const FusionConfig& cfg) {
  GrayImage acc(img.size(), 0.0);
  for (int m = 1; m <= cfg.num_scales; ++m) {
    const GrayImage blurred = gaussian_blur(img, 2 * m + 1, cfg.gauss_sigma * m);
    for (std::size_t i = 0; i < acc.pixel_count(); ++i) acc[i] += img[i] - blurred[i];
  }
  return acc;
}

double log_energy(const GrayImage& detail) {
  double e = 0.0;
  for (double d : detail.pixels()) e += std::log1p(d * d);
  return e;
}

DetailStack make_detail_stack(const GrayImage& img, const FusionConfig& cfg) {
  DetailStack s;
  s.detail = detail_layers(img, cfg);
  s.energy = log_energy(s.detail);
  return s;
}

Mask max_rule_map(const GrayImage& d1, const GrayImage& d2) {
  require_same_size(d1.size(), d2.size(), "max_rule_map");
  Mask hm1(d1.size());
  for (std::size_t i = 0; i < d1.pixel_count(); ++i) hm1[i] = std::abs(d1[i]) >= std::abs(d2[i]) ? 1 : 0;
  return hm1;
}

GrayImage fuse_high(const DetailStack& s1, const DetailStack& s2, double lambda) {
  require_same_size(s1.detail.size(), s2.detail.size(), "fuse_high");
  GrayImage fh(s1.detail.size());
  const auto& d1 = s1.detail;
  const auto& d2 = s2.detail;

  if (std::abs(s1.energy - s2.energy) > lambda) {
    const Mask hm1 = max_rule_map(d1, d2);
    for (std::size_t i = 0; i < fh.pixel_count(); ++i) fh[i] = hm1[i] ? d1[i] : d2[i];
    return fh;
  }

  const double total = s1.energy + s2.energy;
  const double w1 = total > 0.0 ? s1.energy / total : 0.5;
  const double w2 = total > 0.0 ? s2.energy / total : 0.5;
  for (std::size_t i = 0; i < fh.pixel_count(); ++i) {
    // Equal details short-circuit so identical sources reproduce d exactly.
    fh[i] = d1[i] == d2[i] ? d1[i] : w1 * d1[i] + w2 * d2[i];
  }
  return fh;
}

GrayImage enhance(const GrayImage& pf, const GrayImage& fh) {
  require_same_size(pf.size(), fh.size(), "enhance");
  GrayImage epf(pf.size());
  for (std::size_t i = 0; i < epf.pixel_count(); ++i) epf[i] = pf[i] + fh[i];
  return epf.clamp(0.0, 1.0);
}

}  // namespace samf
