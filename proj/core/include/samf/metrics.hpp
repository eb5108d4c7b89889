#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "samf/image.hpp"

namespace samf {

/// 256 x 256 joint intensity-bin counts of an image pair.
class JointHistogram {
 public:
  JointHistogram(const GrayImage& a, const GrayImage& b);

  std::int64_t total() const { return total_; }
  std::int64_t operator()(int i, int j) const { return counts_[static_cast<std::size_t>(i) * 256 + j]; }
  std::array<std::int64_t, 256> marginal_a() const;
  std::array<std::int64_t, 256> marginal_b() const;

  /// Natural-log entropies; empty bins contribute nothing.
  double entropy_a() const;
  double entropy_b() const;
  double joint_entropy() const;
  double mutual_information() const { return entropy_a() + entropy_b() - joint_entropy(); }

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

/// Normalized mutual-information fusion score in [0, 2]:
/// 2 * [MI(a,f) / (H(a)+H(f)) + MI(b,f) / (H(b)+H(f))].
/// A term whose entropy sum is zero contributes 0.
double q_mi(const GrayImage& a, const GrayImage& b, const GrayImage& f);

double mse(const GrayImage& a, const GrayImage& b);
/// Peak signal-to-noise ratio in dB with peak 1; +infinity for identical inputs.
double psnr(const GrayImage& a, const GrayImage& b);
/// Mean over the three channels' squared error.
double psnr(const ColorImage& a, const ColorImage& b);

}  // namespace samf
