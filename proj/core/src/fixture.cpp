#include "samf/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "json.hpp"
#include "samf/error.hpp"
#include "samf/imgproc.hpp"
#include "samf/io.hpp"

namespace samf {

namespace {

// mt19937_64's output sequence is fixed by the standard; distributions are
// not, so conversion to doubles is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

double smooth(double t) { return t * t * (3.0 - 2.0 * t); }

// Lattice value noise with `cell`-pixel spacing, smoothstep interpolated.
GrayImage value_noise(Size size, int cell, Rng& rng) {
  const int gw = size.width / cell + 2;
  const int gh = size.height / cell + 2;
  std::vector<double> lattice(static_cast<std::size_t>(gw) * static_cast<std::size_t>(gh));
  for (double& v : lattice) v = rng.uniform(-1.0, 1.0);
  const auto at = [&](int gx, int gy) { return lattice[static_cast<std::size_t>(gy) * gw + gx]; };

  GrayImage out(size);
  for (int y = 0; y < size.height; ++y) {
    const int gy = y / cell;
    const double ty = smooth(double(y % cell) / cell);
    for (int x = 0; x < size.width; ++x) {
      const int gx = x / cell;
      const double tx = smooth(double(x % cell) / cell);
      const double top = at(gx, gy) + (at(gx + 1, gy) - at(gx, gy)) * tx;
      const double bottom = at(gx, gy + 1) + (at(gx + 1, gy + 1) - at(gx, gy + 1)) * tx;
      out(x, y) = top + (bottom - top) * ty;
    }
  }
  return out;
}

}  // namespace

int defocus_window(double sigma) { return 2 * static_cast<int>(std::ceil(3.0 * sigma)) + 1; }

Fixture make_pair(const ColorImage& gt, const Mask& mask, double sigma) {
  require_same_size(gt.size(), mask.size(), "make_pair mask");
  if (!(sigma > 0.0)) throw ParameterError("blur sigma must be > 0");

  const int window = defocus_window(sigma);
  Fixture f;
  f.ground_truth = gt;
  f.true_map = mask;
  f.blur_sigma = sigma;
  f.source_a = gt;
  f.source_b = gt;
  for (int c = 0; c < 3; ++c) {
    const GrayImage blurred = gaussian_blur(gt.channel(c), window, sigma);
    auto& a = f.source_a.channel(c);
    auto& b = f.source_b.channel(c);
    for (std::size_t i = 0; i < mask.pixel_count(); ++i) {
      if (mask[i]) {
        b[i] = blurred[i];
      } else {
        a[i] = blurred[i];
      }
    }
  }
  return f;
}

ColorImage textured_image(Size size, std::uint64_t seed) {
  Rng rng(seed);
  GrayImage base(size, 0.0);
  const int cells[] = {32, 16, 8, 4, 2};
  const double amps[] = {0.22, 0.18, 0.18, 0.2, 0.2};
  for (int o = 0; o < 5; ++o) {
    const GrayImage octave = value_noise(size, cells[o], rng);
    for (std::size_t i = 0; i < base.pixel_count(); ++i) base[i] += amps[o] * octave[i];
  }

  ColorImage img(size);
  double tint[3];
  for (double& t : tint) t = rng.uniform(0.8, 1.2);
  for (int c = 0; c < 3; ++c) {
    const GrayImage hue = value_noise(size, 32, rng);
    auto& ch = img.channel(c);
    for (std::size_t i = 0; i < ch.pixel_count(); ++i) ch[i] = 0.5 + tint[c] * base[i] + 0.08 * hue[i];
  }

  // Hard-edged shapes add step edges at every scale.
  const int shapes = std::max(4, static_cast<int>(size.area() / 4096));
  for (int s = 0; s < shapes; ++s) {
    const double cx = rng.uniform(0.0, size.width);
    const double cy = rng.uniform(0.0, size.height);
    const double r = rng.uniform(2.0, 10.0);
    const bool disk = rng.uniform() < 0.5;
    double colour[3];
    for (double& v : colour) v = rng.uniform(0.05, 0.95);
    const int x0 = std::max(0, static_cast<int>(cx - r));
    const int x1 = std::min(size.width - 1, static_cast<int>(cx + r));
    const int y0 = std::max(0, static_cast<int>(cy - r));
    const int y1 = std::min(size.height - 1, static_cast<int>(cy + r));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        if (disk && (x - cx) * (x - cx) + (y - cy) * (y - cy) > r * r) continue;
        for (int c = 0; c < 3; ++c) img.channel(c)(x, y) = colour[c];
      }
    }
  }
  for (int c = 0; c < 3; ++c) img.channel(c).clamp(0.0, 1.0);
  return img;
}

Mask half_plane_mask(Size size) {
  Mask m(size);
  for (int y = 0; y < size.height; ++y)
    for (int x = 0; x < size.width / 2; ++x) m(x, y) = 1;
  return m;
}

Mask disk_mask(Size size, double radius) {
  Mask m(size);
  const double cx = (size.width - 1) / 2.0;
  const double cy = (size.height - 1) / 2.0;
  for (int y = 0; y < size.height; ++y)
    for (int x = 0; x < size.width; ++x) m(x, y) = (x - cx) * (x - cx) + (y - cy) * (y - cy) <= radius * radius;
  return m;
}

double map_accuracy(const DecisionMap& fmp, const Mask& truth, double band) {
  require_same_size(fmp.size(), truth.size(), "map_accuracy");
  const GrayImage dist = distance_to_boundary(truth);
  std::size_t counted = 0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.pixel_count(); ++i) {
    if (!(dist[i] > band)) continue;
    ++counted;
    if ((fmp[i] == 1.0 && truth[i]) || (fmp[i] == 0.0 && !truth[i])) ++correct;
  }
  return counted == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(counted);
}

void write_fixture(const std::filesystem::path& dir, const Fixture& fixture, const std::string& mask_spec) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_image(dir / "gt.png", fixture.ground_truth);
  write_image(dir / "a.png", fixture.source_a);
  write_image(dir / "b.png", fixture.source_b);
  write_mask(dir / "mask.png", fixture.true_map);

  nlohmann::ordered_json meta;
  meta["sigma"] = fixture.blur_sigma;
  meta["seed"] = fixture.seed;
  meta["mask"] = mask_spec;
  meta["width"] = fixture.ground_truth.width();
  meta["height"] = fixture.ground_truth.height();
  std::ofstream out(dir / "meta.json");
  out << meta.dump(2) << '\n';
  if (!out) throw IoError("cannot write " + (dir / "meta.json").string());
}

}  // namespace samf
