#include "samf/io.hpp"

#include <algorithm>
#include <cmath>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "samf/error.hpp"
#include "samf/imgproc.hpp"

namespace samf {

namespace {

cv::Mat to_mat8(const GrayImage& plane) {
  cv::Mat m(plane.height(), plane.width(), CV_8UC1);
  for (int y = 0; y < plane.height(); ++y) {
    auto* dst = m.ptr<std::uint8_t>(y);
    const auto src = plane.row(y);
    for (int x = 0; x < plane.width(); ++x) dst[x] = to_u8(src[x]);
  }
  return m;
}

void write_mat(const std::filesystem::path& path, const cv::Mat& m) {
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), m);
  } catch (const cv::Exception& e) {
    throw IoError("cannot write " + path.string() + ": " + e.what());
  }
  if (!ok) throw IoError("cannot write " + path.string());
}

}  // namespace

std::uint8_t to_u8(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

ColorImage read_image(const std::filesystem::path& path) {
  cv::Mat m;
  try {
    m = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  } catch (const cv::Exception& e) {
    throw IoError("cannot decode " + path.string() + ": " + e.what());
  }
  if (m.empty()) throw IoError("cannot read image " + path.string());

  double peak = 0.0;
  switch (m.depth()) {
    case CV_8U: peak = 255.0; break;
    case CV_16U: peak = 65535.0; break;
    default: throw IoError("unsupported sample depth in " + path.string());
  }
  const int channels = m.channels();
  if (channels != 1 && channels != 3 && channels != 4) {
    throw IoError("unsupported channel count in " + path.string());
  }

  const Size size{m.cols, m.rows};
  ColorImage out(size);
  for (int y = 0; y < m.rows; ++y) {
    for (int x = 0; x < m.cols; ++x) {
      for (int c = 0; c < 3; ++c) {
        // OpenCV stores BGR(A).
        const int src_c = channels == 1 ? 0 : 2 - c;
        const double raw = m.depth() == CV_8U ? m.ptr<std::uint8_t>(y)[x * channels + src_c]
                                              : m.ptr<std::uint16_t>(y)[x * channels + src_c];
        out.channel(c)(x, y) = raw / peak;
      }
    }
  }
  return out;
}

void write_image(const std::filesystem::path& path, const ColorImage& image) {
  if (image.is_gray()) {
    write_image(path, image.channel(0));
    return;
  }
  cv::Mat bgr;
  cv::merge(std::vector<cv::Mat>{to_mat8(image.channel(2)), to_mat8(image.channel(1)), to_mat8(image.channel(0))},
            bgr);
  write_mat(path, bgr);
}

void write_image(const std::filesystem::path& path, const GrayImage& image) { write_mat(path, to_mat8(image)); }

void write_scaled(const std::filesystem::path& path, const GrayImage& field, double lo, double hi) {
  if (!(hi > lo)) throw ParameterError("write_scaled needs hi > lo");
  GrayImage mapped = field;
  for (double& v : mapped.pixels()) v = (v - lo) / (hi - lo);
  write_image(path, mapped);
}

void write_mask(const std::filesystem::path& path, const Mask& mask) {
  cv::Mat m(mask.height(), mask.width(), CV_8UC1);
  for (int y = 0; y < mask.height(); ++y) {
    auto* dst = m.ptr<std::uint8_t>(y);
    for (int x = 0; x < mask.width(); ++x) dst[x] = mask(x, y) ? 255 : 0;
  }
  write_mat(path, m);
}

Mask read_mask(const std::filesystem::path& path) {
  const GrayImage gray = to_gray(read_image(path));
  Mask mask(gray.size());
  for (std::size_t i = 0; i < gray.pixel_count(); ++i) mask[i] = gray[i] >= 0.5 ? 1 : 0;
  return mask;
}

}  // namespace samf
