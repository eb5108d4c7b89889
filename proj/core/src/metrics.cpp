#include "samf/metrics.hpp"

#include <cmath>
#include <limits>

#include "samf/imgproc.hpp"

namespace samf {

namespace {

double entropy_of(const std::array<std::int64_t, 256>& counts, std::int64_t total) {
  double h = 0.0;
  for (std::int64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log(p);
  }
  return h;
}

double normalized_term(const GrayImage& src, const GrayImage& fused) {
  const JointHistogram joint(src, fused);
  const double denom = joint.entropy_a() + joint.entropy_b();
  return denom > 0.0 ? joint.mutual_information() / denom : 0.0;
}

}  // namespace

JointHistogram::JointHistogram(const GrayImage& a, const GrayImage& b) : counts_(256 * 256, 0) {
  require_same_size(a.size(), b.size(), "joint histogram");
  for (std::size_t i = 0; i < a.pixel_count(); ++i) {
    ++counts_[static_cast<std::size_t>(intensity_bin(a[i])) * 256 + static_cast<std::size_t>(intensity_bin(b[i]))];
  }
  total_ = static_cast<std::int64_t>(a.pixel_count());
}

std::array<std::int64_t, 256> JointHistogram::marginal_a() const {
  std::array<std::int64_t, 256> m{};
  for (int i = 0; i < 256; ++i)
    for (int j = 0; j < 256; ++j) m[static_cast<std::size_t>(i)] += (*this)(i, j);
  return m;
}

std::array<std::int64_t, 256> JointHistogram::marginal_b() const {
  std::array<std::int64_t, 256> m{};
  for (int i = 0; i < 256; ++i)
    for (int j = 0; j < 256; ++j) m[static_cast<std::size_t>(j)] += (*this)(i, j);
  return m;
}

double JointHistogram::entropy_a() const { return entropy_of(marginal_a(), total_); }

double JointHistogram::entropy_b() const { return entropy_of(marginal_b(), total_); }

double JointHistogram::joint_entropy() const {
  double h = 0.0;
  for (std::int64_t c : counts_) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total_);
    h -= p * std::log(p);
  }
  return h;
}

double q_mi(const GrayImage& a, const GrayImage& b, const GrayImage& f) {
  require_same_size(a.size(), b.size(), "q_mi sources");
  require_same_size(a.size(), f.size(), "q_mi fused");
  return 2.0 * (normalized_term(a, f) + normalized_term(b, f));
}

double mse(const GrayImage& a, const GrayImage& b) {
  require_same_size(a.size(), b.size(), "mse");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.pixel_count(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.pixel_count());
}

namespace {

double psnr_from_mse(double e) {
  return e == 0.0 ? std::numeric_limits<double>::infinity() : 10.0 * std::log10(1.0 / e);
}

}  // namespace

double psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

double psnr(const ColorImage& a, const ColorImage& b) {
  double e = 0.0;
  for (int c = 0; c < 3; ++c) e += mse(a.channel(c), b.channel(c));
  return psnr_from_mse(e / 3.0);
}

}  // namespace samf
