#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace samf {

struct Size {
  int width = 0;
  int height = 0;

  std::size_t area() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  friend bool operator==(const Size&, const Size&) = default;
};

/// Row-major single-channel plane of doubles.
///
/// Holds source luminance (nominally [0,1]) as well as every signed or
/// unbounded intermediate field of the pipeline: detail layers, SSIM score
/// maps, difference maps. A default-constructed image is empty (0x0); every
/// sized constructor requires width >= 1 and height >= 1.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(Size size, double fill = 0.0);
  GrayImage(int width, int height, double fill = 0.0) : GrayImage(Size{width, height}, fill) {}
  GrayImage(Size size, std::vector<double> data);

  int width() const { return size_.width; }
  int height() const { return size_.height; }
  Size size() const { return size_; }
  std::size_t pixel_count() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(int x, int y) { return data_[index(x, y)]; }
  double operator()(int x, int y) const { return data_[index(x, y)]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> pixels() { return data_; }
  std::span<const double> pixels() const { return data_; }
  std::span<double> row(int y) { return {data_.data() + index(0, y), static_cast<std::size_t>(size_.width)}; }
  std::span<const double> row(int y) const {
    return {data_.data() + index(0, y), static_cast<std::size_t>(size_.width)};
  }

  double min() const;
  double max() const;
  double sum() const;

  /// Clamps every value into [lo, hi] in place.
  GrayImage& clamp(double lo = 0.0, double hi = 1.0);

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(size_.width) + static_cast<std::size_t>(x);
  }

  Size size_{};
  std::vector<double> data_;
};

/// Three RGB planes sharing one grid.
class ColorImage {
 public:
  ColorImage() = default;
  ColorImage(Size size, double fill = 0.0);
  ColorImage(GrayImage r, GrayImage g, GrayImage b);

  /// Replicates a single plane into all three channels.
  static ColorImage from_gray(const GrayImage& gray);

  int width() const { return channels_[0].width(); }
  int height() const { return channels_[0].height(); }
  Size size() const { return channels_[0].size(); }
  bool empty() const { return channels_[0].empty(); }

  GrayImage& channel(int c) { return channels_[static_cast<std::size_t>(c)]; }
  const GrayImage& channel(int c) const { return channels_[static_cast<std::size_t>(c)]; }

  /// True when all three channels hold identical values.
  bool is_gray() const;

  friend bool operator==(const ColorImage&, const ColorImage&) = default;

 private:
  std::array<GrayImage, 3> channels_;
};

/// Row-major binary mask with values in {0, 1}.
class Mask {
 public:
  Mask() = default;
  Mask(Size size, std::uint8_t fill = 0);
  Mask(int width, int height, std::uint8_t fill = 0) : Mask(Size{width, height}, fill) {}

  int width() const { return size_.width; }
  int height() const { return size_.height; }
  Size size() const { return size_; }
  std::size_t pixel_count() const { return data_.size(); }

  std::uint8_t& operator()(int x, int y) { return data_[static_cast<std::size_t>(y) * size_.width + x]; }
  std::uint8_t operator()(int x, int y) const { return data_[static_cast<std::size_t>(y) * size_.width + x]; }
  std::uint8_t& operator[](std::size_t i) { return data_[i]; }
  std::uint8_t operator[](std::size_t i) const { return data_[i]; }

  std::span<const std::uint8_t> pixels() const { return data_; }
  std::size_t count() const;
  Mask inverted() const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  Size size_{};
  std::vector<std::uint8_t> data_;
};

/// Throws DimensionError naming `what` unless both grids match.
void require_same_size(Size a, Size b, std::string_view what);

}  // namespace samf
