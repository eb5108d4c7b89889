#include "samf/image.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "samf/error.hpp"

namespace samf {

namespace {

void require_positive(Size size) {
  if (size.width < 1 || size.height < 1) {
    throw ParameterError("image dimensions must be positive, got " + std::to_string(size.width) + "x" +
                         std::to_string(size.height));
  }
}

}  // namespace

GrayImage::GrayImage(Size size, double fill) : size_(size) {
  require_positive(size);
  data_.assign(size.area(), fill);
}

GrayImage::GrayImage(Size size, std::vector<double> data) : size_(size), data_(std::move(data)) {
  require_positive(size);
  if (data_.size() != size.area()) {
    throw DimensionError("pixel buffer holds " + std::to_string(data_.size()) + " values, expected " +
                         std::to_string(size.area()));
  }
}

double GrayImage::min() const { return *std::min_element(data_.begin(), data_.end()); }

double GrayImage::max() const { return *std::max_element(data_.begin(), data_.end()); }

double GrayImage::sum() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

GrayImage& GrayImage::clamp(double lo, double hi) {
  for (double& v : data_) v = std::clamp(v, lo, hi);
  return *this;
}

ColorImage::ColorImage(Size size, double fill)
    : channels_{GrayImage(size, fill), GrayImage(size, fill), GrayImage(size, fill)} {}

ColorImage::ColorImage(GrayImage r, GrayImage g, GrayImage b) : channels_{std::move(r), std::move(g), std::move(b)} {
  require_same_size(channels_[0].size(), channels_[1].size(), "color channels");
  require_same_size(channels_[0].size(), channels_[2].size(), "color channels");
}

ColorImage ColorImage::from_gray(const GrayImage& gray) { return ColorImage(gray, gray, gray); }

bool ColorImage::is_gray() const { return channels_[0] == channels_[1] && channels_[0] == channels_[2]; }

Mask::Mask(Size size, std::uint8_t fill) : size_(size) {
  require_positive(size);
  data_.assign(size.area(), fill);
}

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](std::uint8_t v) { return v != 0; }));
}

Mask Mask::inverted() const {
  Mask out = *this;
  for (auto& v : out.data_) v = v ? 0 : 1;
  return out;
}

void require_same_size(Size a, Size b, std::string_view what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": size mismatch " + std::to_string(a.width) + "x" +
                         std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                         std::to_string(b.height));
  }
}

}  // namespace samf
