#include "samf/ssim.hpp"

#include <algorithm>

#include "samf/error.hpp"
#include "samf/imgproc.hpp"

namespace samf {

GrayImage ssim_map(const GrayImage& x, const GrayImage& y, int window) {
  require_same_size(x.size(), y.size(), "ssim_map");
  if (window < 3 || window % 2 == 0) throw ParameterError("ssim window must be odd and >= 3");

  const auto taps = gaussian_kernel(window, kSsimSigma);
  const std::size_t n = x.pixel_count();

  GrayImage xx(x.size());
  GrayImage yy(x.size());
  GrayImage xy(x.size());
  for (std::size_t i = 0; i < n; ++i) {
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const GrayImage mu_x = convolve_separable(x, taps);
  const GrayImage mu_y = convolve_separable(y, taps);
  const GrayImage e_xx = convolve_separable(xx, taps);
  const GrayImage e_yy = convolve_separable(yy, taps);
  const GrayImage e_xy = convolve_separable(xy, taps);

  GrayImage out(x.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double mx = mu_x[i];
    const double my = mu_y[i];
    const double vx = e_xx[i] - mx * mx;
    const double vy = e_yy[i] - my * my;
    const double cov = e_xy[i] - mx * my;
    const double num = (2.0 * mx * my + kSsimC1) * (2.0 * cov + kSsimC2);
    const double den = (mx * mx + my * my + kSsimC1) * (vx + vy + kSsimC2);
    out[i] = std::clamp(num / den, -1.0, 1.0);
  }
  return out;
}

}  // namespace samf
