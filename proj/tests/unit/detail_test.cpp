#include <gtest/gtest.h>

#include <cmath>

#include "samf/detail.hpp"
#include "samf/error.hpp"
#include "samf/imgproc.hpp"
#include "test_images.hpp"

namespace samf {
namespace {

using testing::Gen;

DetailStack stack_of(GrayImage detail, double energy) { return DetailStack{std::move(detail), energy}; }

TEST(DetailLayers, ConstantImageHasNoDetail) {
  FusionConfig cfg;
  for (int m = 1; m <= 5; ++m) {
    cfg.num_scales = m;
    const GrayImage d = detail_layers(GrayImage(Size{20, 15}, 0.3), cfg);
    for (double v : d.pixels()) ASSERT_NEAR(v, 0.0, 1e-15);
  }
}

TEST(DetailLayers, SingleScaleIsImageMinusBlur) {
  Gen gen(1);
  const GrayImage img = gen.image(Size{16, 12});
  FusionConfig cfg;
  cfg.num_scales = 1;
  cfg.gauss_sigma = 1.3;
  const GrayImage d = detail_layers(img, cfg);
  const GrayImage b = gaussian_blur(img, 3, 1.3);
  for (std::size_t i = 0; i < d.pixel_count(); ++i) EXPECT_EQ(d[i], img[i] - b[i]);
}

TEST(DetailLayers, ImpulseCentreMatchesAnalyticKernels) {
  GrayImage img(Size{11, 11}, 0.0);
  img(5, 5) = 1.0;
  FusionConfig cfg;
  cfg.num_scales = 2;
  cfg.gauss_sigma = 1.0;
  const GrayImage d = detail_layers(img, cfg);

  // Centre tap of a normalized 2-D Gaussian truncated to a (2r+1)^2 window.
  const auto centre = [](int r, double sigma) {
    double s = 0.0;
    for (int k = -r; k <= r; ++k) s += std::exp(-k * k / (2.0 * sigma * sigma));
    return 1.0 / (s * s);
  };
  EXPECT_NEAR(d(5, 5), 2.0 - centre(1, 1.0) - centre(2, 2.0), 1e-12);
}

TEST(LogEnergy, Examples) {
  EXPECT_EQ(log_energy(GrayImage(Size{4, 4}, 0.0)), 0.0);
  EXPECT_NEAR(log_energy(GrayImage(Size{1, 1}, 1.0)), std::log(2.0), 1e-15);
  EXPECT_NEAR(log_energy(GrayImage(Size{2, 1}, std::vector<double>{1.0, 2.0})), std::log(2.0) + std::log(5.0),
              1e-14);
}

TEST(LogEnergy, MonotoneInMagnitude) {
  Gen gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Size size{gen.integer(1, 20), gen.integer(1, 20)};
    const GrayImage d = gen.image(size, -1.0, 1.0);
    GrayImage bigger = d;
    for (std::size_t i = 0; i < bigger.pixel_count(); ++i) bigger[i] = -d[i] * gen.uniform(1.0, 2.0);
    ASSERT_LE(log_energy(d), log_energy(bigger));
  }
}

TEST(MaxRuleMap, Examples) {
  const GrayImage d1(Size{3, 1}, std::vector<double>{0.5, -3.0, 0.0});
  const GrayImage d2(Size{3, 1}, std::vector<double>{-0.5, 2.0, 0.1});
  const Mask hm1 = max_rule_map(d1, d2);
  EXPECT_EQ(hm1[0], 1);
  EXPECT_EQ(hm1[1], 1);
  EXPECT_EQ(hm1[2], 0);
  EXPECT_EQ(hm1.inverted()[2], 1);
}

TEST(FuseHigh, EqualEnergiesAverage) {
  Gen gen(9);
  const GrayImage d1 = gen.image(Size{8, 8}, -1, 1);
  const GrayImage d2 = gen.image(Size{8, 8}, -1, 1);
  const GrayImage fh = fuse_high(stack_of(d1, 3.0), stack_of(d2, 3.0), 1.0);
  for (std::size_t i = 0; i < fh.pixel_count(); ++i) EXPECT_NEAR(fh[i], (d1[i] + d2[i]) / 2, 1e-15);
}

TEST(FuseHigh, LargeEnergyGapTakesMaxRule) {
  const GrayImage d1(Size{2, 1}, std::vector<double>{0.1, -0.9});
  const GrayImage d2(Size{2, 1}, std::vector<double>{0.5, 0.2});
  const GrayImage fh = fuse_high(stack_of(d1, 10.0), stack_of(d2, 0.0), 1.0);
  EXPECT_EQ(fh[0], 0.5);
  EXPECT_EQ(fh[1], -0.9);
}

TEST(FuseHigh, IdenticalDetailIsReproducedInBothBranches) {
  Gen gen(3);
  const GrayImage d = gen.image(Size{10, 10}, -1, 1);
  EXPECT_EQ(fuse_high(stack_of(d, 7.0), stack_of(d, 1.0), 0.5), d);  // max rule
  EXPECT_EQ(fuse_high(stack_of(d, 7.0), stack_of(d, 1.0), 100.0), d);  // weighted
}

TEST(FuseHigh, ZeroEnergiesUseEqualWeights) {
  const GrayImage d1(Size{1, 1}, 0.2);
  const GrayImage d2(Size{1, 1}, 0.4);
  EXPECT_NEAR(fuse_high(stack_of(d1, 0.0), stack_of(d2, 0.0), 1.0)[0], 0.3, 1e-15);
}

TEST(FuseHigh, WeightedBranchIsConvex) {
  Gen gen(14);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage d1 = gen.image(Size{6, 6}, -1, 1);
    const GrayImage d2 = gen.image(Size{6, 6}, -1, 1);
    const GrayImage fh = fuse_high(stack_of(d1, gen.uniform(0, 5)), stack_of(d2, gen.uniform(0, 5)), 10.0);
    for (std::size_t i = 0; i < fh.pixel_count(); ++i) {
      ASSERT_GE(fh[i], std::min(d1[i], d2[i]) - 1e-15);
      ASSERT_LE(fh[i], std::max(d1[i], d2[i]) + 1e-15);
    }
  }
}

TEST(Enhance, Examples) {
  const GrayImage pf(Size{2, 1}, std::vector<double>{0.9, 0.5});
  const GrayImage fh(Size{2, 1}, std::vector<double>{0.3, -0.1});
  const GrayImage epf = enhance(pf, fh);
  EXPECT_EQ(epf[0], 1.0);
  EXPECT_NEAR(epf[1], 0.4, 1e-15);
  EXPECT_EQ(enhance(pf, GrayImage(Size{2, 1}, 0.0)), pf);
}

TEST(Enhance, RejectsMismatch) {
  EXPECT_THROW(enhance(GrayImage(Size{2, 2}), GrayImage(Size{2, 1})), DimensionError);
}

}  // namespace
}  // namespace samf
