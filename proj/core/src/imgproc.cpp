#include "samf/imgproc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "samf/error.hpp"

namespace samf {

GrayImage to_gray(const ColorImage& img) {
  GrayImage out(img.size());
  const auto r = img.channel(0).pixels();
  const auto g = img.channel(1).pixels();
  const auto b = img.channel(2).pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = std::clamp(0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i], 0.0, 1.0);
  }
  return out;
}

int mirror_index(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * n;
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - 1 - m;
}

std::vector<double> gaussian_kernel(int window, double sigma) {
  if (window < 1 || window % 2 == 0) {
    throw ParameterError("gaussian window must be odd and >= 1, got " + std::to_string(window));
  }
  if (!(sigma > 0.0)) {
    throw ParameterError("gaussian sigma must be positive");
  }
  const int radius = window / 2;
  std::vector<double> taps(static_cast<std::size_t>(window));
  double total = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    const double w = std::exp(-0.5 * k * k / (sigma * sigma));
    taps[static_cast<std::size_t>(k + radius)] = w;
    total += w;
  }
  for (double& w : taps) w /= total;
  return taps;
}

GrayImage convolve_separable(const GrayImage& img, const std::vector<double>& taps) {
  const int w = img.width();
  const int h = img.height();
  const int radius = static_cast<int>(taps.size()) / 2;
  if (radius == 0) {
    GrayImage out = img;
    for (double& v : out.pixels()) v *= taps[0];
    return out;
  }

  GrayImage horiz(img.size());
  std::vector<double> line(static_cast<std::size_t>(std::max(w, h) + 2 * radius));
  for (int y = 0; y < h; ++y) {
    const auto src = img.row(y);
    for (int x = -radius; x < w + radius; ++x) line[static_cast<std::size_t>(x + radius)] = src[mirror_index(x, w)];
    auto dst = horiz.row(y);
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < taps.size(); ++k) acc += taps[k] * line[static_cast<std::size_t>(x) + k];
      dst[x] = acc;
    }
  }

  // Columns are processed in row-major blocks so the inner loop streams.
  GrayImage out(img.size(), 0.0);
  for (int y = 0; y < h; ++y) {
    auto dst = out.row(y);
    for (int k = -radius; k <= radius; ++k) {
      const double t = taps[static_cast<std::size_t>(k + radius)];
      const auto src = horiz.row(mirror_index(y + k, h));
      for (int x = 0; x < w; ++x) dst[x] += t * src[x];
    }
  }
  return out;
}

GrayImage gaussian_blur(const GrayImage& img, int window, double sigma) {
  return convolve_separable(img, gaussian_kernel(window, sigma));
}

int intensity_bin(double v) {
  const double c = std::clamp(v, 0.0, 1.0);
  return static_cast<int>(std::floor(c * 255.0 + 0.5));
}

Histogram256 histogram256(const GrayImage& img) {
  Histogram256 counts{};
  for (double v : img.pixels()) ++counts[static_cast<std::size_t>(intensity_bin(v))];
  return counts;
}

namespace {

// Flood-fills every pixel accepted by `include`, joining neighbours with equal
// mask value. Unvisited excluded pixels keep label 0.
template <typename Include>
Components label_impl(const Mask& mask, Connectivity connectivity, Include include) {
  const int w = mask.width();
  const int h = mask.height();
  Components out;
  out.size = mask.size();
  out.labels.assign(mask.pixel_count(), 0);

  static constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  static constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
  const int neighbours = connectivity == Connectivity::Eight ? 8 : 4;

  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < mask.pixel_count(); ++seed) {
    if (out.labels[seed] != 0 || !include(mask[seed])) continue;
    const int label = out.count() + 1;
    const std::uint8_t value = mask[seed];
    std::int64_t area = 0;
    out.labels[seed] = label;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      ++area;
      const int x = static_cast<int>(p % static_cast<std::size_t>(w));
      const int y = static_cast<int>(p / static_cast<std::size_t>(w));
      for (int k = 0; k < neighbours; ++k) {
        const int nx = x + kDx[k];
        const int ny = y + kDy[k];
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        const std::size_t q = static_cast<std::size_t>(ny) * static_cast<std::size_t>(w) + static_cast<std::size_t>(nx);
        if (out.labels[q] == 0 && mask[q] == value) {
          out.labels[q] = label;
          stack.push_back(q);
        }
      }
    }
    out.areas.push_back(area);
  }
  return out;
}

// Felzenszwalb-Huttenlocher lower envelope of parabolas, in place.
void squared_distance_1d(std::vector<double>& f, std::vector<int>& v, std::vector<double>& z,
                         std::vector<double>& d) {
  const int n = static_cast<int>(f.size());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (std::isinf(f[static_cast<std::size_t>(q)])) continue;
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
      continue;
    }
    double s = 0.0;
    while (true) {
      const int p = v[static_cast<std::size_t>(k)];
      s = ((f[static_cast<std::size_t>(q)] + double(q) * q) - (f[static_cast<std::size_t>(p)] + double(p) * p)) /
          (2.0 * (q - p));
      if (s > z[static_cast<std::size_t>(k)]) break;
      --k;  // z[0] = -inf stops this at k = 0
    }
    ++k;
    v[static_cast<std::size_t>(k)] = q;
    z[static_cast<std::size_t>(k)] = s;
    z[static_cast<std::size_t>(k + 1)] = kInf;
  }
  if (k < 0) {
    std::fill(d.begin(), d.begin() + n, kInf);
  } else {
    int j = 0;
    for (int q = 0; q < n; ++q) {
      while (z[static_cast<std::size_t>(j + 1)] < q) ++j;
      const int p = v[static_cast<std::size_t>(j)];
      d[static_cast<std::size_t>(q)] = double(q - p) * (q - p) + f[static_cast<std::size_t>(p)];
    }
  }
  std::copy(d.begin(), d.begin() + n, f.begin());
}

}  // namespace

Components connected_components(const Mask& mask, Connectivity connectivity) {
  return label_impl(mask, connectivity, [](std::uint8_t v) { return v != 0; });
}

Components label_uniform_regions(const Mask& mask, Connectivity connectivity) {
  return label_impl(mask, connectivity, [](std::uint8_t) { return true; });
}

GrayImage distance_to_boundary(const Mask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  GrayImage dist(mask.size(), kInf);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto v = mask(x, y);
      const bool edge = (x > 0 && mask(x - 1, y) != v) || (x + 1 < w && mask(x + 1, y) != v) ||
                        (y > 0 && mask(x, y - 1) != v) || (y + 1 < h && mask(x, y + 1) != v);
      if (edge) dist(x, y) = 0.0;
    }
  }

  const int n = std::max(w, h);
  std::vector<double> f(static_cast<std::size_t>(n));
  std::vector<double> d(static_cast<std::size_t>(n));
  std::vector<double> z(static_cast<std::size_t>(n) + 1);
  std::vector<int> v(static_cast<std::size_t>(n));

  f.resize(static_cast<std::size_t>(h));
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) f[static_cast<std::size_t>(y)] = dist(x, y);
    squared_distance_1d(f, v, z, d);
    for (int y = 0; y < h; ++y) dist(x, y) = f[static_cast<std::size_t>(y)];
  }
  f.resize(static_cast<std::size_t>(w));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) f[static_cast<std::size_t>(x)] = dist(x, y);
    squared_distance_1d(f, v, z, d);
    for (int x = 0; x < w; ++x) dist(x, y) = std::sqrt(f[static_cast<std::size_t>(x)]);
  }
  return dist;
}

}  // namespace samf
