#include "samf/fuse.hpp"

#include <algorithm>

#include "samf/detail.hpp"
#include "samf/error.hpp"
#include "samf/imgproc.hpp"
#include "samf/recursive_filter.hpp"
#include "samf/saliency.hpp"
#include "samf/ssim.hpp"

namespace samf {

ColorImage compose(const ColorImage& i1, const ColorImage& i2, const DecisionMap& fmp, const ColorImage& pf) {
  require_same_size(i1.size(), i2.size(), "compose sources");
  require_same_size(i1.size(), fmp.size(), "compose decision map");
  require_same_size(i1.size(), pf.size(), "compose pre-fusion");
  if (fmp.stage() != Stage::Fmp) throw ParameterError("compose expects a final decision map");

  ColorImage out(i1.size());
  for (int c = 0; c < 3; ++c) {
    const auto& a = i1.channel(c);
    const auto& b = i2.channel(c);
    const auto& p = pf.channel(c);
    auto& dst = out.channel(c);
    for (std::size_t i = 0; i < dst.pixel_count(); ++i) {
      const double level = fmp[i];
      dst[i] = level == 1.0 ? a[i] : level == 0.0 ? b[i] : p[i];
    }
  }
  return out;
}

ColorImage prefuse_color(const ColorImage& i1, const ColorImage& i2, const GrayImage& wf) {
  return ColorImage(prefuse(i1.channel(0), i2.channel(0), wf), prefuse(i1.channel(1), i2.channel(1), wf),
                    prefuse(i1.channel(2), i2.channel(2), wf));
}

FusionResult run_pipeline(const ColorImage& i1, const ColorImage& i2, const FusionConfig& cfg,
                          bool keep_intermediates) {
  cfg.validate();
  require_same_size(i1.size(), i2.size(), "source images");
  const Size size = i1.size();

  FusionResult result;
  result.config_used = cfg;
  result.config_used.log_energy_threshold = cfg.resolved_lambda(size);

  const GrayImage g1 = to_gray(i1);
  const GrayImage g2 = to_gray(i2);

  // Saliency-weighted pre-fusion.
  const GrayImage wf = saliency_weight(vsm(g1), vsm(g2));
  GrayImage pf = prefuse(g1, g2, wf);

  // Multi-scale detail, fused by log-energy, lifts PF to EPF.
  const DetailStack d1 = make_detail_stack(g1, cfg);
  const DetailStack d2 = make_detail_stack(g2, cfg);
  GrayImage epf = enhance(pf, fuse_high(d1, d2, *result.config_used.log_energy_threshold));

  // Focus scores and their edge-aware regularization.
  GrayImage scm1 = ssim_map(epf, g1, cfg.ssim_window);
  GrayImage scm2 = ssim_map(epf, g2, cfg.ssim_window);
  GrayImage b1 = recursive_filter(scm1, g1, cfg.rf);
  GrayImage b2 = recursive_filter(scm2, g2, cfg.rf);

  DecisionMap tmp = two_region(b1, b2);
  DecisionMap omp = consistency_verify(tmp, cfg);

  GrayImage guide_avg(size);
  for (std::size_t i = 0; i < guide_avg.pixel_count(); ++i) guide_avg[i] = (g1[i] + g2[i]) / 2.0;
  DiffMaps diff = diff_maps(scm1, scm2, b1, b2, guide_avg, cfg.rf);
  DecisionMap rmp = three_region(diff, b1, b2, cfg.balance_beta);

  result.fmp = final_map(omp, rmp);
  result.fused = compose(i1, i2, result.fmp, prefuse_color(i1, i2, wf));

  if (keep_intermediates) {
    result.intermediates = Intermediates{std::move(pf),   std::move(epf),  std::move(scm1),
                                         std::move(scm2), std::move(b1),   std::move(b2),
                                         std::move(diff), std::move(tmp),  std::move(omp),
                                         std::move(rmp)};
  }
  return result;
}

}  // namespace samf
