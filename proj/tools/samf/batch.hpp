#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "samf/config.hpp"
#include "samf/manifest.hpp"

namespace samf::cli {

/// A `<stem>-A.<ext>` / `<stem>-B.<ext>` pair found in a batch input directory.
struct PairJob {
  std::string stem;
  std::filesystem::path a;
  std::filesystem::path b;  ///< empty when the B image is missing
};

/// Pairs sorted by stem. Throws IoError when `dir` is not a readable directory.
std::vector<PairJob> discover_pairs(const std::filesystem::path& dir);

/// Worker count: `requested` (or hardware concurrency when unset), capped by
/// the SAMF_THREADS environment variable, never below 1.
int thread_budget(std::optional<int> requested);

struct FuseRequest {
  std::string pair;
  std::filesystem::path a;
  std::filesystem::path b;
  std::filesystem::path out;
  FusionConfig config;
  bool metrics = false;
  std::optional<std::filesystem::path> debug_dir;
};

/// Fuses one pair and returns its manifest record. Failures are captured in
/// the record (error + exit_code) rather than thrown.
ManifestRecord fuse_pair(const FuseRequest& request);

struct BatchOptions {
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  FusionConfig config;
  std::optional<int> threads;
  bool metrics = false;
};

struct BatchSummary {
  std::size_t pairs = 0;
  std::size_t fused = 0;
  std::size_t failed = 0;
  std::filesystem::path manifest;
  int exit_code = 0;
};

/// Fuses every pair into `<output_dir>/<stem>-F.png` and writes
/// `<output_dir>/manifest.jsonl` in stem order.
BatchSummary run_batch(const BatchOptions& options, std::ostream& log);

}  // namespace samf::cli
