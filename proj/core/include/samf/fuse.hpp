#pragma once

#include <optional>

#include "samf/config.hpp"
#include "samf/image.hpp"
#include "samf/segment.hpp"

namespace samf {

/// Every plane produced between the sources and the final map.
struct Intermediates {
  GrayImage pf;   ///< luminance pre-fusion
  GrayImage epf;  ///< enhanced pre-fusion
  GrayImage scm1, scm2;
  GrayImage b1, b2;
  DiffMaps diff;
  DecisionMap tmp, omp, rmp;
};

struct FusionResult {
  ColorImage fused;
  DecisionMap fmp;
  /// Present only when requested from run_pipeline.
  std::optional<Intermediates> intermediates;
  FusionConfig config_used;
};

/// Per-pixel, per-channel selection: I_1 where fmp = 1, I_2 where fmp = 0,
/// PF where fmp = 0.5. Selected source values are copied unchanged.
ColorImage compose(const ColorImage& i1, const ColorImage& i2, const DecisionMap& fmp, const ColorImage& pf);

/// Per-channel pre-fusion with a shared luminance-derived weight map.
ColorImage prefuse_color(const ColorImage& i1, const ColorImage& i2, const GrayImage& wf);

/// Runs the whole two-source pipeline. Throws DimensionError when the
/// sources differ in size and ParameterError when `cfg` is invalid.
FusionResult run_pipeline(const ColorImage& i1, const ColorImage& i2, const FusionConfig& cfg = {},
                          bool keep_intermediates = false);

}  // namespace samf
