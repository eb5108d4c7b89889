#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "samf/error.hpp"
#include "samf/imgproc.hpp"
#include "samf/metrics.hpp"
#include "test_images.hpp"

namespace samf {
namespace {

using testing::Gen;

// Normalized MI term from sparse pair counts, independent of JointHistogram.
double nmi_direct(const GrayImage& a, const GrayImage& f) {
  std::map<int, double> pa, pf;
  std::map<std::pair<int, int>, double> pj;
  const double n = static_cast<double>(a.pixel_count());
  for (std::size_t i = 0; i < a.pixel_count(); ++i) {
    const int x = intensity_bin(a[i]);
    const int y = intensity_bin(f[i]);
    pa[x] += 1 / n;
    pf[y] += 1 / n;
    pj[{x, y}] += 1 / n;
  }
  double ha = 0, hf = 0, mi = 0;
  for (auto [k, p] : pa) ha -= p * std::log(p);
  for (auto [k, p] : pf) hf -= p * std::log(p);
  for (auto [k, p] : pj) mi += p * std::log(p / (pa[k.first] * pf[k.second]));
  return ha + hf > 0 ? mi / (ha + hf) : 0.0;
}

TEST(QMi, IdenticalNonConstantImagesScoreTwo) {
  Gen gen(1);
  const GrayImage x = gen.image8(Size{64, 64});
  EXPECT_NEAR(q_mi(x, x, x), 2.0, 1e-12);
}

TEST(QMi, IndependentNoiseScoresNearZero) {
  Gen gen(2);
  const Size size{1024, 1024};
  const GrayImage a = gen.image8(size);
  const GrayImage b = gen.image8(size);
  const GrayImage f = gen.image8(size);
  const double q = q_mi(a, b, f);
  EXPECT_GE(q, 0.0);
  EXPECT_LE(q, 0.05);
}

TEST(QMi, MatchesDirectComputation) {
  Gen gen(3);
  for (int trial = 0; trial < 5; ++trial) {
    const Size size{gen.integer(5, 60), gen.integer(5, 60)};
    const GrayImage a = gen.image(size);
    const GrayImage b = gen.image(size);
    GrayImage f(size);
    for (std::size_t i = 0; i < f.pixel_count(); ++i) f[i] = 0.5 * (a[i] + b[i]);
    EXPECT_NEAR(q_mi(a, b, f), 2 * (nmi_direct(a, f) + nmi_direct(b, f)), 1e-10);
  }
}

TEST(QMi, ConstantImagesScoreZero) {
  const GrayImage c(Size{8, 8}, 0.3);
  EXPECT_EQ(q_mi(c, c, c), 0.0);
}

TEST(QMi, SymmetricAndBounded) {
  Gen gen(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Size size{gen.integer(2, 50), gen.integer(2, 50)};
    const GrayImage a = gen.image(size);
    const GrayImage b = gen.image(size);
    GrayImage f = a;
    for (std::size_t i = 0; i < f.pixel_count(); i += 2) f[i] = b[i];
    const double q = q_mi(a, b, f);
    EXPECT_EQ(q, q_mi(b, a, f));
    EXPECT_GE(q, 0.0);
    EXPECT_LE(q, 2.0 + 1e-12);
  }
}

TEST(QMi, InvariantUnderSharedBijectiveRelabelling) {
  Gen gen(5);
  std::array<int, 256> lut{};
  std::iota(lut.begin(), lut.end(), 0);
  for (int i = 255; i > 0; --i) std::swap(lut[static_cast<std::size_t>(i)], lut[static_cast<std::size_t>(gen.integer(0, i))]);
  const auto relabel = [&](const GrayImage& img) {
    GrayImage out(img.size());
    for (std::size_t i = 0; i < img.pixel_count(); ++i) out[i] = lut[static_cast<std::size_t>(intensity_bin(img[i]))] / 255.0;
    return out;
  };
  const Size size{40, 40};
  const GrayImage a = gen.image8(size);
  const GrayImage b = gen.image8(size);
  GrayImage f = a;
  for (std::size_t i = 0; i < f.pixel_count(); i += 3) f[i] = b[i];
  EXPECT_NEAR(q_mi(a, b, f), q_mi(relabel(a), relabel(b), relabel(f)), 1e-12);
}

TEST(JointHistogram, MarginalsAndIdentity) {
  Gen gen(6);
  const GrayImage a = gen.image(Size{20, 20});
  const JointHistogram j(a, a);
  EXPECT_EQ(j.total(), 400);
  EXPECT_EQ(j.marginal_a(), histogram256(a));
  EXPECT_NEAR(j.mutual_information(), j.entropy_a(), 1e-12);
  EXPECT_NEAR(j.joint_entropy(), j.entropy_a(), 1e-12);
}

TEST(Psnr, KnownValues) {
  const GrayImage a(Size{4, 4}, 0.5);
  EXPECT_TRUE(std::isinf(psnr(a, a)));
  const GrayImage b(Size{4, 4}, 0.6);
  EXPECT_NEAR(mse(a, b), 0.01, 1e-15);
  EXPECT_NEAR(psnr(a, b), 20.0, 1e-9);
  EXPECT_NEAR(psnr(ColorImage::from_gray(a), ColorImage::from_gray(b)), 20.0, 1e-9);
  EXPECT_THROW(mse(a, GrayImage(Size{4, 3})), DimensionError);
}

}  // namespace
}  // namespace samf
