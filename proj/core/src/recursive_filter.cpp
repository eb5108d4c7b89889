#include "samf/recursive_filter.hpp"

#include <cmath>

namespace samf {

double rf_round_sigma(double sigma_s, int i, int n) {
  return sigma_s * std::sqrt(3.0) * std::pow(2.0, n - (i + 1)) / std::sqrt(std::pow(4.0, n) - 1.0);
}

GrayImage recursive_filter(const GrayImage& signal, const GrayImage& guide, const RfParams& params) {
  require_same_size(signal.size(), guide.size(), "recursive_filter");
  params.validate();

  const int w = signal.width();
  const int h = signal.height();
  const double ratio = params.sigma_s / params.sigma_r;

  // Domain-transform derivatives; entry k couples sample k with k - 1.
  GrayImage dx(signal.size(), 1.0);
  GrayImage dy(signal.size(), 1.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 1; x < w; ++x) dx(x, y) = 1.0 + ratio * std::abs(guide(x, y) - guide(x - 1, y));
  }
  for (int y = 1; y < h; ++y) {
    for (int x = 0; x < w; ++x) dy(x, y) = 1.0 + ratio * std::abs(guide(x, y) - guide(x, y - 1));
  }

  GrayImage out = signal;
  GrayImage feedback(signal.size());
  for (int i = 0; i < params.iterations; ++i) {
    const double a = std::exp(-std::sqrt(2.0) / rf_round_sigma(params.sigma_s, i, params.iterations));

    for (std::size_t k = 0; k < feedback.pixel_count(); ++k) feedback[k] = std::pow(a, dx[k]);
    for (int y = 0; y < h; ++y) {
      auto row = out.row(y);
      const auto v = feedback.row(y);
      for (int x = 1; x < w; ++x) row[x] += v[x] * (row[x - 1] - row[x]);
      for (int x = w - 2; x >= 0; --x) row[x] += v[x + 1] * (row[x + 1] - row[x]);
    }

    for (std::size_t k = 0; k < feedback.pixel_count(); ++k) feedback[k] = std::pow(a, dy[k]);
    for (int y = 1; y < h; ++y) {
      auto row = out.row(y);
      const auto prev = out.row(y - 1);
      const auto v = feedback.row(y);
      for (int x = 0; x < w; ++x) row[x] += v[x] * (prev[x] - row[x]);
    }
    for (int y = h - 2; y >= 0; --y) {
      auto row = out.row(y);
      const auto next = out.row(y + 1);
      const auto v = feedback.row(y + 1);
      for (int x = 0; x < w; ++x) row[x] += v[x] * (next[x] - row[x]);
    }
  }
  return out;
}

}  // namespace samf
