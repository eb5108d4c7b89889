#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "samf/config.hpp"

namespace samf::cli {

/// One line of a run manifest.
struct ManifestRecord {
  std::string pair;
  std::vector<std::string> inputs;
  std::optional<std::string> out;
  std::optional<double> q_mi;
  double ms = 0.0;
  std::string config_hash;
  std::optional<FusionConfig> config;
  std::optional<std::string> error;
  int exit_code = 0;

  std::string to_json_line() const;
};

/// Appends records to a line-delimited manifest strictly in slot order,
/// whatever order the slots complete in. Thread-safe.
class OrderedAppender {
 public:
  OrderedAppender(const std::filesystem::path& path, std::size_t slots, bool append = false);

  void submit(std::size_t slot, const ManifestRecord& record);
  std::size_t written() const;

 private:
  mutable std::mutex mutex_;
  std::ofstream out_;
  std::vector<std::optional<std::string>> pending_;
  std::size_t next_ = 0;
};

}  // namespace samf::cli
