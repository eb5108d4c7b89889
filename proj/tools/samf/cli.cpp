#include "samf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "samf/batch.hpp"
#include "samf/error.hpp"
#include "samf/exit_codes.hpp"
#include "samf/fixture.hpp"
#include "samf/imgproc.hpp"
#include "samf/io.hpp"
#include "samf/metrics.hpp"

namespace samf::cli {

namespace fs = std::filesystem;

int exit_code_for_current_exception() {
  try {
    throw;
  } catch (const IoError&) {
    return kUnreadable;
  } catch (const DimensionError&) {
    return kDimensionMismatch;
  } catch (const ParameterError&) {
    return kBadConfig;
  } catch (...) {
    return kFailure;
  }
}

namespace {

// Config flags are applied over the optional --config file, so only flags
// that were actually given override it.
struct ConfigFlags {
  std::string file;
  FusionConfig values;
  double lambda = 0.0;
  std::vector<std::pair<CLI::Option*, std::function<void(FusionConfig&)>>> given;

  void attach(CLI::App* app) {
    app->add_option("--config", file, "JSON config file (flat keys, as printed by `config --dump`)");
    add(app->add_option("--scales", values.num_scales, "number of detail scales M"),
        [this](FusionConfig& c) { c.num_scales = values.num_scales; });
    add(app->add_option("--gauss-sigma", values.gauss_sigma, "base Gaussian sigma of the detail layers"),
        [this](FusionConfig& c) { c.gauss_sigma = values.gauss_sigma; });
    add(app->add_option("--lambda", lambda, "log-energy threshold (default 0.02 x pixel count)"),
        [this](FusionConfig& c) { c.log_energy_threshold = lambda; });
    add(app->add_option("--beta", values.balance_beta, "three-region balance parameter"),
        [this](FusionConfig& c) { c.balance_beta = values.balance_beta; });
    add(app->add_option("--ssim-window", values.ssim_window, "odd SSIM window"),
        [this](FusionConfig& c) { c.ssim_window = values.ssim_window; });
    add(app->add_option("--rf-sigma-s", values.rf.sigma_s, "recursive filter spatial sigma"),
        [this](FusionConfig& c) { c.rf.sigma_s = values.rf.sigma_s; });
    add(app->add_option("--rf-sigma-r", values.rf.sigma_r, "recursive filter range sigma"),
        [this](FusionConfig& c) { c.rf.sigma_r = values.rf.sigma_r; });
    add(app->add_option("--rf-iterations", values.rf.iterations, "recursive filter iterations"),
        [this](FusionConfig& c) { c.rf.iterations = values.rf.iterations; });
    add(app->add_option("--consistency-window", values.consistency_window, "odd majority-vote window"),
        [this](FusionConfig& c) { c.consistency_window = values.consistency_window; });
    add(app->add_option("--consistency-passes", values.consistency_passes, "majority-vote passes"),
        [this](FusionConfig& c) { c.consistency_passes = values.consistency_passes; });
    add(app->add_option("--consistency-min-area", values.consistency_min_area,
                        "regions below this image fraction are flipped"),
        [this](FusionConfig& c) { c.consistency_min_area = values.consistency_min_area; });
  }

  void add(CLI::Option* opt, std::function<void(FusionConfig&)> apply) { given.emplace_back(opt, std::move(apply)); }

  FusionConfig resolve() const {
    FusionConfig cfg;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw IoError("cannot read config file " + file);
      std::stringstream text;
      text << in.rdbuf();
      cfg.merge_json(text.str());
    }
    for (const auto& [opt, apply] : given) {
      if (opt->count() > 0) apply(cfg);
    }
    cfg.validate();
    return cfg;
  }
};

fs::path default_manifest_for(const fs::path& out) {
  fs::path m = out;
  m.replace_extension(".manifest.jsonl");
  return m;
}

int cmd_fuse(const std::vector<std::string>& sources, const std::string& output, const ConfigFlags& flags,
             bool metrics, const std::string& debug_dir, const std::string& manifest, std::ostream& out,
             std::ostream& err) {
  if (sources.size() != 2) {
    err << "fuse takes exactly two source images, got " << sources.size() << '\n';
    return kBadConfig;
  }
  FuseRequest request;
  request.pair = fs::path(sources[0]).stem().string() + "|" + fs::path(sources[1]).stem().string();
  request.a = sources[0];
  request.b = sources[1];
  request.out = output;
  request.config = flags.resolve();
  request.metrics = metrics;
  if (!debug_dir.empty()) request.debug_dir = fs::path(debug_dir);

  const ManifestRecord record = fuse_pair(request);
  const fs::path manifest_path = manifest.empty() ? default_manifest_for(request.out) : fs::path(manifest);
  OrderedAppender appender(manifest_path, 1, /*append=*/true);
  appender.submit(0, record);

  if (record.error) {
    err << "fuse: " << *record.error << '\n';
    return record.exit_code;
  }
  out << "wrote " << output;
  if (record.q_mi) out << " (Q_MI " << *record.q_mi << ")";
  out << '\n';
  return kOk;
}

Mask parse_mask(const std::string& spec, Size size) {
  if (spec == "half") return half_plane_mask(size);
  if (spec.rfind("disk:", 0) == 0) {
    double radius = 0.0;
    try {
      std::size_t used = 0;
      radius = std::stod(spec.substr(5), &used);
      if (used != spec.size() - 5) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw ParameterError("bad disk radius in mask spec '" + spec + "'");
    }
    if (!(radius > 0.0)) throw ParameterError("disk radius must be > 0");
    return disk_mask(size, radius);
  }
  if (spec.rfind("file:", 0) == 0) {
    Mask m = read_mask(spec.substr(5));
    require_same_size(m.size(), size, "mask file");
    return m;
  }
  throw ParameterError("mask spec must be half, disk:<r> or file:<path>, got '" + spec + "'");
}

Size parse_size(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    const int w = std::stoi(text.substr(0, x));
    const int h = std::stoi(text.substr(x + 1));
    if (w < 1 || h < 1) throw std::invalid_argument(text);
    return {w, h};
  } catch (const std::exception&) {
    throw ParameterError("size must look like 512x512, got '" + text + "'");
  }
}

int cmd_synth(const std::string& gt_path, const std::string& mask_spec, double sigma, const std::string& size_text,
              std::uint64_t seed, const std::string& out_dir, std::ostream& out) {
  if (!(sigma > 0.0)) throw ParameterError("--sigma must be > 0");
  const ColorImage gt = gt_path.empty() ? textured_image(parse_size(size_text), seed) : read_image(gt_path);
  const Mask mask = parse_mask(mask_spec, gt.size());
  Fixture fixture = make_pair(gt, mask, sigma);
  fixture.seed = seed;
  write_fixture(out_dir, fixture, mask_spec);
  out << "wrote fixture to " << out_dir << '\n';
  return kOk;
}

int cmd_metrics(const std::vector<std::string>& images, const std::string& reference, std::ostream& out) {
  const GrayImage a = to_gray(read_image(images[0]));
  const GrayImage b = to_gray(read_image(images[1]));
  const ColorImage fused = read_image(images[2]);
  const GrayImage f = to_gray(fused);
  nlohmann::ordered_json j;
  j["q_mi"] = q_mi(a, b, f);
  if (!reference.empty()) {
    const ColorImage ref = read_image(reference);
    require_same_size(ref.size(), fused.size(), "reference");
    j["psnr"] = psnr(fused, ref);
  }
  out << j.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"samf: small-area-aware multi-focus image fusion", "samf"};
  app.require_subcommand(1);

  // fuse
  auto* fuse = app.add_subcommand("fuse", "fuse two partially focused images");
  std::vector<std::string> sources;
  std::string fuse_out;
  std::string debug_dir;
  std::string manifest;
  bool fuse_metrics = false;
  ConfigFlags fuse_flags;
  fuse->add_option("sources", sources, "source images A and B")->required();
  fuse->add_option("-o,--output", fuse_out, "fused image path")->required();
  fuse->add_option("--debug-maps", debug_dir, "directory for intermediate planes");
  fuse->add_flag("--metrics", fuse_metrics, "compute Q_MI and record it in the manifest");
  fuse->add_option("--manifest", manifest, "manifest to append to (default <output>.manifest.jsonl)");
  fuse_flags.attach(fuse);

  // batch
  auto* batch = app.add_subcommand("batch", "fuse every <stem>-A/<stem>-B pair in a directory");
  std::string batch_in;
  std::string batch_out;
  int threads = 0;
  bool batch_metrics = false;
  ConfigFlags batch_flags;
  batch->add_option("input_dir", batch_in)->required();
  batch->add_option("output_dir", batch_out)->required();
  auto* threads_opt = batch->add_option("--threads", threads, "worker threads (capped by SAMF_THREADS)");
  batch->add_flag("--metrics", batch_metrics, "compute Q_MI per pair");
  batch_flags.attach(batch);

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic multi-focus fixture");
  std::string gt_path;
  std::string mask_spec = "half";
  double sigma = 3.0;
  std::string size_text = "512x512";
  std::uint64_t seed = 1;
  std::string synth_out;
  synth->add_option("ground_truth", gt_path, "all-in-focus image (procedural texture when omitted)");
  synth->add_option("--mask", mask_spec, "half | disk:<radius> | file:<path>");
  synth->add_option("--sigma", sigma, "defocus blur sigma in pixels");
  synth->add_option("--size", size_text, "procedural texture size, WxH");
  synth->add_option("--seed", seed, "procedural texture seed");
  synth->add_option("-o,--output", synth_out, "fixture directory")->required();

  // metrics
  auto* metrics = app.add_subcommand("metrics", "report Q_MI of a fused image");
  std::vector<std::string> metric_images;
  std::string reference;
  metrics->add_option("images", metric_images, "source A, source B, fused")->required()->expected(3);
  metrics->add_option("--reference", reference, "ground truth for PSNR");

  // config
  auto* config = app.add_subcommand("config", "print the effective configuration");
  bool dump = false;
  ConfigFlags config_flags;
  config->add_flag("--dump", dump, "print the configuration as JSON");
  config_flags.attach(config);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kBadConfig;
  }

  try {
    if (fuse->parsed()) {
      return cmd_fuse(sources, fuse_out, fuse_flags, fuse_metrics, debug_dir, manifest, out, err);
    }
    if (batch->parsed()) {
      BatchOptions options;
      options.input_dir = batch_in;
      options.output_dir = batch_out;
      options.config = batch_flags.resolve();
      if (threads_opt->count() > 0) options.threads = threads;
      options.metrics = batch_metrics;
      return run_batch(options, out).exit_code;
    }
    if (synth->parsed()) return cmd_synth(gt_path, mask_spec, sigma, size_text, seed, synth_out, out);
    if (metrics->parsed()) return cmd_metrics(metric_images, reference, out);
    if (config->parsed()) {
      const FusionConfig cfg = config_flags.resolve();
      out << cfg.to_json(dump ? 2 : -1) << '\n';
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "samf: " << e.what() << '\n';
    return exit_code_for_current_exception();
  }
  return kFailure;
}

}  // namespace samf::cli
