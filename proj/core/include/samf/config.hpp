#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "samf/image.hpp"

namespace samf {

/// Parameters of the edge-aware recursive filter.
struct RfParams {
  double sigma_s = 10.0;  ///< spatial scale, pixels
  double sigma_r = 0.05;  ///< range scale, intensity units
  int iterations = 3;

  void validate() const;

  friend bool operator==(const RfParams&, const RfParams&) = default;
};

/// Every tunable of the fusion pipeline.
struct FusionConfig {
  /// Number of detail scales M; scale m uses a (2m+1)-wide window.
  int num_scales = 4;
  /// Base Gaussian sigma; scale m uses gauss_sigma * m.
  double gauss_sigma = 1.0;
  /// Threshold on |E_1 - E_2| selecting the max-rule branch of detail
  /// fusion. Unset means 0.02 per pixel of the processed image.
  std::optional<double> log_energy_threshold;
  /// Weight on the difference-blur map in the three-region test.
  double balance_beta = 0.5;
  int ssim_window = 11;
  RfParams rf;
  int consistency_window = 5;
  int consistency_passes = 2;
  /// Regions of the two-region map smaller than this fraction of the image
  /// are flipped before the majority vote.
  double consistency_min_area = 0.001;

  static constexpr double kDefaultLambdaPerPixel = 0.02;

  /// Throws ParameterError on the first violated constraint.
  void validate() const;

  double resolved_lambda(Size size) const {
    return log_energy_threshold ? *log_energy_threshold
                                : kDefaultLambdaPerPixel * static_cast<double>(size.area());
  }

  std::string to_json(int indent = -1) const;
  /// Parses a flat JSON object; keys not present keep their defaults.
  /// Unknown keys and wrongly typed values raise ParameterError.
  static FusionConfig from_json(const std::string& text);
  /// Overlays the keys present in `text` onto this config.
  void merge_json(const std::string& text);

  /// Stable 64-bit FNV-1a hash of the compact JSON form, as 16 hex digits.
  std::string hash() const;

  friend bool operator==(const FusionConfig&, const FusionConfig&) = default;
};

}  // namespace samf
