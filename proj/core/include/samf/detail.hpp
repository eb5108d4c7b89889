#pragma once

#include "samf/config.hpp"
#include "samf/image.hpp"

namespace samf {

/// Accumulated high-frequency detail of one source and its log-energy.
struct DetailStack {
  GrayImage detail;
  double energy = 0.0;
};

/// Sum over m = 1..M of I - blur(I, 2m+1, sigma*m). Signed.
GrayImage detail_layers(const GrayImage& img, const FusionConfig& cfg);

/// Sum of log(1 + d^2) over the field.
double log_energy(const GrayImage& detail);

DetailStack make_detail_stack(const GrayImage& img, const FusionConfig& cfg);

/// HM_1 = 1 where |d1| >= |d2|, else 0. HM_2 is its complement.
Mask max_rule_map(const GrayImage& d1, const GrayImage& d2);

/// Fused high-frequency field FH. The max-rule branch is taken when
/// |E_1 - E_2| > lambda, otherwise the energy-weighted sum.
GrayImage fuse_high(const DetailStack& s1, const DetailStack& s2, double lambda);

/// EPF = clamp(PF + FH, 0, 1).
GrayImage enhance(const GrayImage& pf, const GrayImage& fh);

}  // namespace samf
