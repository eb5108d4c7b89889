#pragma once

#include <cstdint>
#include <string_view>

#include "samf/config.hpp"
#include "samf/image.hpp"

namespace samf {

/// Which stage produced a decision map; fixes the permitted levels.
enum class Stage {
  Tmp,  ///< two-region map, {0, 1}
  Omp,  ///< verified two-region map, {0, 1}
  Rmp,  ///< three-region map, {0.5 uncertain, 1 focused, 2 defocused}
  Fmp,  ///< final map, {0 source 2, 0.5 uncertain, 1 source 1}
};

std::string_view stage_name(Stage stage);

/// Per-pixel focus labels for source 1, tagged with the producing stage.
class DecisionMap {
 public:
  static constexpr double kUncertain = 0.5;
  static constexpr double kDefocused = 2.0;  // RMP only

  DecisionMap() = default;
  /// Throws ParameterError if any value is not a level of `stage`.
  DecisionMap(Stage stage, GrayImage levels);
  DecisionMap(Stage stage, Size size, double fill);

  Stage stage() const { return stage_; }
  Size size() const { return levels_.size(); }
  int width() const { return levels_.width(); }
  int height() const { return levels_.height(); }
  std::size_t pixel_count() const { return levels_.pixel_count(); }

  double operator[](std::size_t i) const { return levels_[i]; }
  double operator()(int x, int y) const { return levels_(x, y); }
  const GrayImage& levels() const { return levels_; }

  /// {0,1} maps as a mask. Throws for RMP and FMP.
  Mask to_mask() const;
  static DecisionMap from_mask(Stage stage, const Mask& mask);

  /// Fraction of pixels at `level`.
  double fraction(double level) const;

  /// 8-bit display value: 0 -> 0, 0.5 -> 128, 1 -> 255, and RMP 2 -> 64.
  static std::uint8_t display_value(double level);

  static bool is_level(Stage stage, double v);

  friend bool operator==(const DecisionMap&, const DecisionMap&) = default;

 private:
  Stage stage_ = Stage::Fmp;
  GrayImage levels_;
};

/// The three non-negative difference fields of the three-region test.
struct DiffMaps {
  GrayImage dm;   ///< |SCM_1 - SCM_2|
  GrayImage dbm;  ///< rf(DM)
  GrayImage bdm;  ///< |B_1 - B_2|
};

/// TMP = 1 where b1 >= b2 (ties favour source 1), else 0.
DecisionMap two_region(const GrayImage& b1, const GrayImage& b2);

/// Small-region flipping followed by windowed majority votes.
///
/// Regions (8-connected, either polarity) smaller than
/// cfg.consistency_min_area of the image are flipped smallest first, each
/// flip merging the region into its surroundings, until none remain. Then
/// cfg.consistency_passes majority votes over a consistency_window square
/// (mirror borders) are applied.
DecisionMap consistency_verify(const DecisionMap& tmp, const FusionConfig& cfg);

/// The small-region step of consistency_verify on its own.
/// Regions with area < min_area are flipped, smallest first.
Mask remove_small_regions(const Mask& mask, double min_area);

/// One majority vote over a `window` x `window` square.
Mask majority_vote(const Mask& mask, int window);

DiffMaps diff_maps(const GrayImage& scm1, const GrayImage& scm2, const GrayImage& b1, const GrayImage& b2,
                   const GrayImage& guide_avg, const RfParams& rf);

/// RMP: 1 where BDM > beta*DBM and b1 > b2; 2 where BDM > beta*DBM and
/// b1 <= b2; 0.5 elsewhere.
DecisionMap three_region(const DiffMaps& dm, const GrayImage& b1, const GrayImage& b2, double beta);

/// FMP: 1 where OMP = 1 and RMP = 1; 0 where OMP = 0 and RMP = 2; else 0.5.
DecisionMap final_map(const DecisionMap& omp, const DecisionMap& rmp);

}  // namespace samf
