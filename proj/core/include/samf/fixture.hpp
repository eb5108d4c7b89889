#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "samf/image.hpp"
#include "samf/segment.hpp"

namespace samf {

/// A synthetic multi-focus pair with its ground truth.
struct Fixture {
  ColorImage ground_truth;
  ColorImage source_a;  ///< sharp where true_map = 1
  ColorImage source_b;  ///< sharp where true_map = 0
  Mask true_map;
  double blur_sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Window used to simulate defocus: 2 * ceil(3 * sigma) + 1.
int defocus_window(double sigma);

/// Blurs the whole ground truth once, then selects sharp or blurred pixels
/// per mask, so blur bleeds across the mask boundary.
Fixture make_pair(const ColorImage& gt, const Mask& mask, double sigma);

/// Deterministic multi-octave texture with scattered shapes, in [0,1].
ColorImage textured_image(Size size, std::uint64_t seed);

/// 1 on the left half (x < width / 2).
Mask half_plane_mask(Size size);
/// 1 inside a disk of `radius` centred on the image.
Mask disk_mask(Size size, double radius);

/// Fraction of pixels farther than `band` from the truth boundary where the
/// map agrees with the truth; uncertain labels count as disagreement.
/// Returns 1 when no pixel lies outside the band.
double map_accuracy(const DecisionMap& fmp, const Mask& truth, double band);

/// Writes gt.png, a.png, b.png, mask.png and meta.json into `dir`.
void write_fixture(const std::filesystem::path& dir, const Fixture& fixture, const std::string& mask_spec);

}  // namespace samf
