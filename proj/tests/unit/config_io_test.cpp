#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "samf/config.hpp"
#include "samf/error.hpp"
#include "samf/io.hpp"
#include "test_images.hpp"

namespace samf {
namespace {

namespace fs = std::filesystem;
using testing::Gen;

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("samf_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(FusionConfig, DefaultsValidate) { EXPECT_NO_THROW(FusionConfig{}.validate()); }

TEST(FusionConfig, JsonRoundTrip) {
  FusionConfig c;
  c.num_scales = 3;
  c.balance_beta = 0.7;
  c.log_energy_threshold = 12.5;
  c.rf.sigma_s = 22;
  EXPECT_EQ(FusionConfig::from_json(c.to_json()), c);
  EXPECT_EQ(FusionConfig::from_json(FusionConfig{}.to_json(2)), FusionConfig{});
}

TEST(FusionConfig, PartialJsonKeepsDefaults) {
  const FusionConfig c = FusionConfig::from_json(R"({"balance_beta": 0.25})");
  FusionConfig want;
  want.balance_beta = 0.25;
  EXPECT_EQ(c, want);
}

TEST(FusionConfig, MergeOverlaysKeys) {
  FusionConfig c;
  c.num_scales = 6;
  c.merge_json(R"({"rf_iterations": 5})");
  EXPECT_EQ(c.num_scales, 6);
  EXPECT_EQ(c.rf.iterations, 5);
}

TEST(FusionConfig, RejectsMalformedInput) {
  EXPECT_THROW(FusionConfig::from_json("{"), ParameterError);
  EXPECT_THROW(FusionConfig::from_json("[1]"), ParameterError);
  EXPECT_THROW(FusionConfig::from_json(R"({"nope": 1})"), ParameterError);
  EXPECT_THROW(FusionConfig::from_json(R"({"num_scales": 1.5})"), ParameterError);
  EXPECT_THROW(FusionConfig::from_json(R"({"gauss_sigma": "x"})"), ParameterError);
}

TEST(FusionConfig, ValidateNamesViolations) {
  const auto invalid = [](auto mutate) {
    FusionConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), ParameterError);
  };
  invalid([](FusionConfig& c) { c.num_scales = 0; });
  invalid([](FusionConfig& c) { c.gauss_sigma = 0; });
  invalid([](FusionConfig& c) { c.balance_beta = 0; });
  invalid([](FusionConfig& c) { c.balance_beta = 1.5; });
  invalid([](FusionConfig& c) { c.ssim_window = 8; });
  invalid([](FusionConfig& c) { c.consistency_window = 1; });
  invalid([](FusionConfig& c) { c.consistency_passes = -1; });
  invalid([](FusionConfig& c) { c.consistency_min_area = 1.0; });
  invalid([](FusionConfig& c) { c.log_energy_threshold = -1.0; });
  invalid([](FusionConfig& c) { c.rf.sigma_r = 0; });
}

TEST(FusionConfig, ResolvedLambdaScalesWithArea) {
  FusionConfig c;
  EXPECT_DOUBLE_EQ(c.resolved_lambda(Size{100, 50}), 100.0);
  c.log_energy_threshold = 3.0;
  EXPECT_EQ(c.resolved_lambda(Size{100, 50}), 3.0);
}

TEST(FusionConfig, HashIsStableAndSensitive) {
  FusionConfig a;
  FusionConfig b;
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  b.balance_beta = 0.51;
  EXPECT_NE(a.hash(), b.hash());
}

TEST(Io, ToU8RoundsAndClamps) {
  EXPECT_EQ(to_u8(0.0), 0);
  EXPECT_EQ(to_u8(1.0), 255);
  EXPECT_EQ(to_u8(-0.3), 0);
  EXPECT_EQ(to_u8(1.7), 255);
  EXPECT_EQ(to_u8(0.5), 128);
  for (int v = 0; v < 256; ++v) EXPECT_EQ(to_u8(v / 255.0), v);
}

TEST(Io, ColorPngRoundTripIsExact) {
  TempDir dir;
  Gen gen(1);
  const ColorImage img = gen.color8(Size{17, 11});
  write_image(dir.path() / "c.png", img);
  EXPECT_EQ(read_image(dir.path() / "c.png"), img);
}

TEST(Io, GrayPngReadsAsReplicatedPlanes) {
  TempDir dir;
  Gen gen(2);
  const GrayImage img = gen.image8(Size{9, 13});
  write_image(dir.path() / "g.png", img);
  const ColorImage back = read_image(dir.path() / "g.png");
  EXPECT_TRUE(back.is_gray());
  EXPECT_EQ(back.channel(0), img);
}

TEST(Io, MaskRoundTrip) {
  TempDir dir;
  Gen gen(3);
  const Mask m = gen.mask(Size{12, 12});
  write_mask(dir.path() / "m.png", m);
  EXPECT_EQ(read_mask(dir.path() / "m.png"), m);
}

TEST(Io, ScaledFieldMapsRangeEnds) {
  TempDir dir;
  const GrayImage field(Size{3, 1}, std::vector<double>{-1.0, 0.0, 1.0});
  write_scaled(dir.path() / "s.png", field, -1.0, 1.0);
  const ColorImage back = read_image(dir.path() / "s.png");
  EXPECT_EQ(to_u8(back.channel(0)[0]), 0);
  EXPECT_EQ(to_u8(back.channel(0)[1]), 128);
  EXPECT_EQ(to_u8(back.channel(0)[2]), 255);
}

TEST(Io, UnreadableFilesRaiseIoError) {
  TempDir dir;
  EXPECT_THROW(read_image(dir.path() / "missing.png"), IoError);
  std::ofstream(dir.path() / "junk.png") << "not an image";
  EXPECT_THROW(read_image(dir.path() / "junk.png"), IoError);
}

}  // namespace
}  // namespace samf
