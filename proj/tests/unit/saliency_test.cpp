#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "samf/error.hpp"
#include "samf/imgproc.hpp"
#include "samf/saliency.hpp"
#include "test_images.hpp"

namespace samf {
namespace {

using testing::Gen;

// Direct pairwise sum over all pixels, then min-max normalization.
GrayImage vsm_brute_force(const GrayImage& img) {
  const std::size_t n = img.pixel_count();
  std::vector<double> raw(n, 0.0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) raw[p] += std::abs(intensity_bin(img[p]) - intensity_bin(img[q]));
  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  GrayImage out(img.size(), 0.0);
  if (*hi == *lo) return out;
  for (std::size_t p = 0; p < n; ++p) out[p] = (raw[p] - *lo) / (*hi - *lo);
  return out;
}

TEST(Vsm, ConstantImageIsZero) {
  const GrayImage out = vsm(GrayImage(Size{7, 5}, 0.42));
  for (double v : out.pixels()) EXPECT_EQ(v, 0.0);
}

TEST(Vsm, ThreePixelExample) {
  const GrayImage out = vsm(GrayImage(Size{3, 1}, std::vector<double>{0.0, 0.0, 1.0}));
  EXPECT_EQ(out[0], 0.0);
  EXPECT_EQ(out[1], 0.0);
  EXPECT_EQ(out[2], 1.0);
}

TEST(Vsm, SymmetricPairIsZero) {
  const GrayImage out = vsm(GrayImage(Size{2, 1}, std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(out[0], 0.0);
  EXPECT_EQ(out[1], 0.0);
}

TEST(Vsm, MatchesPairwiseSum) {
  Gen gen(31);
  for (int trial = 0; trial < 8; ++trial) {
    const GrayImage img = gen.image(Size{gen.integer(1, 20), gen.integer(1, 20)});
    const GrayImage got = vsm(img);
    const GrayImage want = vsm_brute_force(img);
    for (std::size_t i = 0; i < got.pixel_count(); ++i) ASSERT_NEAR(got[i], want[i], 0x1.0p-24);
  }
}

TEST(Vsm, EqualIntensitiesGetEqualSaliency) {
  Gen gen(2);
  const GrayImage img = gen.image8(Size{30, 30});
  const GrayImage s = vsm(img);
  for (std::size_t p = 0; p < img.pixel_count(); ++p)
    for (std::size_t q = p + 1; q < img.pixel_count(); q += 17)
      if (img[p] == img[q]) ASSERT_EQ(s[p], s[q]);
}

TEST(Vsm, ValuesInUnitRange) {
  Gen gen(5);
  const GrayImage s = vsm(gen.image(Size{40, 40}));
  EXPECT_GE(s.min(), 0.0);
  EXPECT_LE(s.max(), 1.0);
}

TEST(SaliencyWeight, Examples) {
  const GrayImage s1(Size{2, 1}, std::vector<double>{1.0, 0.0});
  const GrayImage s2(Size{2, 1}, std::vector<double>{0.0, 1.0});
  const GrayImage wf = saliency_weight(s1, s2);
  EXPECT_EQ(wf[0], 1.0);
  EXPECT_EQ(wf[1], 0.0);
  const GrayImage same = saliency_weight(s1, s1);
  EXPECT_EQ(same[0], 0.5);
  EXPECT_EQ(same[1], 0.5);
}

TEST(SaliencyWeight, SwapGivesExactComplement) {
  Gen gen(12);
  for (int trial = 0; trial < 5; ++trial) {
    const Size size{gen.integer(5, 40), gen.integer(5, 40)};
    const GrayImage s1 = vsm(gen.image(size));
    const GrayImage s2 = vsm(gen.image(size));
    const GrayImage a = saliency_weight(s1, s2);
    const GrayImage b = saliency_weight(s2, s1);
    for (std::size_t i = 0; i < a.pixel_count(); ++i) ASSERT_EQ(a[i], 1.0 - b[i]);
  }
}

TEST(SaliencyWeight, RejectsMismatch) {
  EXPECT_THROW(saliency_weight(GrayImage(Size{2, 2}), GrayImage(Size{3, 2})), DimensionError);
}

TEST(Prefuse, Examples) {
  const GrayImage i1(Size{1, 1}, 0.2);
  const GrayImage i2(Size{1, 1}, 0.6);
  EXPECT_NEAR(prefuse(i1, i2, GrayImage(Size{1, 1}, 0.5))[0], 0.4, 1e-15);

  Gen gen(7);
  const GrayImage x = gen.image(Size{9, 9});
  const GrayImage y = gen.image(Size{9, 9});
  EXPECT_EQ(prefuse(x, y, GrayImage(Size{9, 9}, 1.0)), x);
  EXPECT_EQ(prefuse(x, x, gen.image(Size{9, 9})), x);
}

TEST(Prefuse, StaysBetweenSources) {
  Gen gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Size size{gen.integer(1, 30), gen.integer(1, 30)};
    const GrayImage a = gen.image(size);
    const GrayImage b = gen.image(size);
    const GrayImage pf = prefuse(a, b, gen.image(size));
    for (std::size_t i = 0; i < pf.pixel_count(); ++i) {
      ASSERT_GE(pf[i], std::min(a[i], b[i]));
      ASSERT_LE(pf[i], std::max(a[i], b[i]));
    }
  }
}

}  // namespace
}  // namespace samf
