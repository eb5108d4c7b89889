#include "samf/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <map>
#include <thread>

#include "samf/error.hpp"
#include "samf/exit_codes.hpp"
#include "samf/fuse.hpp"
#include "samf/imgproc.hpp"
#include "samf/io.hpp"
#include "samf/metrics.hpp"

namespace samf::cli {

namespace fs = std::filesystem;

namespace {

bool is_image_extension(std::string ext) {
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp" || ext == ".tif" || ext == ".tiff";
}

void write_debug_maps(const fs::path& dir, const FusionResult& result) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const auto& im = *result.intermediates;
  write_image(dir / "pf.png", im.pf);
  write_image(dir / "epf.png", im.epf);
  write_scaled(dir / "scm1.png", im.scm1, -1.0, 1.0);
  write_scaled(dir / "scm2.png", im.scm2, -1.0, 1.0);
  write_scaled(dir / "b1.png", im.b1, -1.0, 1.0);
  write_scaled(dir / "b2.png", im.b2, -1.0, 1.0);
  write_scaled(dir / "dm.png", im.diff.dm, 0.0, 1.0);
  write_scaled(dir / "dbm.png", im.diff.dbm, 0.0, 1.0);
  write_scaled(dir / "bdm.png", im.diff.bdm, 0.0, 1.0);
  const auto write_map = [&](const char* name, const DecisionMap& map) {
    GrayImage shown(map.size());
    for (std::size_t i = 0; i < map.pixel_count(); ++i) shown[i] = DecisionMap::display_value(map[i]) / 255.0;
    write_image(dir / name, shown);
  };
  write_map("tmp.png", im.tmp);
  write_map("omp.png", im.omp);
  write_map("rmp.png", im.rmp);
  write_map("fmp.png", result.fmp);
}

}  // namespace

std::vector<PairJob> discover_pairs(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("not a readable directory: " + dir.string());

  std::map<std::string, PairJob> by_stem;
  std::map<std::string, std::vector<fs::path>> b_images;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (!is_image_extension(p.extension().string())) continue;
    const std::string name = p.stem().string();
    if (name.size() < 3 || name[name.size() - 2] != '-') continue;
    const std::string stem = name.substr(0, name.size() - 2);
    if (name.back() == 'A') {
      by_stem[stem] = PairJob{stem, p, {}};
    } else if (name.back() == 'B') {
      b_images[stem].push_back(p);
    }
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());

  std::vector<PairJob> jobs;
  for (auto& [stem, job] : by_stem) {
    if (auto it = b_images.find(stem); it != b_images.end()) {
      // Same extension as A wins; otherwise the first candidate by name.
      auto& candidates = it->second;
      std::sort(candidates.begin(), candidates.end());
      job.b = candidates.front();
      for (const auto& path : candidates) {
        if (path.extension() == job.a.extension()) job.b = path;
      }
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

int thread_budget(std::optional<int> requested) {
  int n = requested.value_or(static_cast<int>(std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("SAMF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v > 0) n = std::min<long>(n, v);
  }
  return std::max(1, n);
}

ManifestRecord fuse_pair(const FuseRequest& request) {
  ManifestRecord record;
  record.pair = request.pair;
  record.inputs = {request.a.string(), request.b.string()};
  record.config_hash = request.config.hash();
  record.config = request.config;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (request.b.empty()) throw IoError("no B image for pair '" + request.pair + "'");
    const ColorImage a = read_image(request.a);
    const ColorImage b = read_image(request.b);
    const FusionResult result = run_pipeline(a, b, request.config, request.debug_dir.has_value());
    write_image(request.out, result.fused);
    if (request.debug_dir) write_debug_maps(*request.debug_dir, result);
    if (request.metrics) record.q_mi = q_mi(to_gray(a), to_gray(b), to_gray(result.fused));
    record.out = request.out.string();
    record.config = result.config_used;
    record.config_hash = result.config_used.hash();
  } catch (...) {
    record.exit_code = exit_code_for_current_exception();
    try {
      throw;
    } catch (const std::exception& e) {
      record.error = e.what();
    } catch (...) {
      record.error = "unknown error";
    }
  }
  record.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

BatchSummary run_batch(const BatchOptions& options, std::ostream& log) {
  options.config.validate();
  const std::vector<PairJob> jobs = discover_pairs(options.input_dir);

  std::error_code ec;
  fs::create_directories(options.output_dir, ec);
  if (ec) throw IoError("cannot create " + options.output_dir.string() + ": " + ec.message());

  BatchSummary summary;
  summary.pairs = jobs.size();
  summary.manifest = options.output_dir / "manifest.jsonl";
  OrderedAppender appender(summary.manifest, jobs.size());
  if (jobs.empty()) {
    log << "no <stem>-A / <stem>-B pairs in " << options.input_dir.string() << '\n';
    summary.exit_code = kNoPairs;
    return summary;
  }

  const int workers = std::min<int>(thread_budget(options.threads), static_cast<int>(jobs.size()));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failed{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const PairJob& job = jobs[i];
      FuseRequest request{job.stem, job.a, job.b, options.output_dir / (job.stem + "-F.png"), options.config,
                          options.metrics, std::nullopt};
      const ManifestRecord record = fuse_pair(request);
      if (record.error) ++failed;
      appender.submit(i, record);
    }
  };

  std::vector<std::jthread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  summary.failed = failed.load();
  summary.fused = summary.pairs - summary.failed;
  log << "fused " << summary.fused << "/" << summary.pairs << " pairs with " << workers << " thread(s)\n";
  summary.exit_code = kOk;
  return summary;
}

}  // namespace samf::cli
