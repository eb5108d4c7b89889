#include "samf/manifest.hpp"

#include "json.hpp"
#include "samf/error.hpp"

namespace samf::cli {

std::string ManifestRecord::to_json_line() const {
  nlohmann::ordered_json j;
  j["pair"] = pair;
  j["inputs"] = inputs;
  j["out"] = out ? nlohmann::ordered_json(*out) : nlohmann::ordered_json(nullptr);
  j["q_mi"] = q_mi ? nlohmann::ordered_json(*q_mi) : nlohmann::ordered_json(nullptr);
  j["ms"] = ms;
  j["config_hash"] = config_hash;
  if (config) j["config"] = nlohmann::ordered_json::parse(config->to_json());
  if (error) {
    j["error"] = *error;
    j["exit_code"] = exit_code;
  }
  return j.dump();
}

OrderedAppender::OrderedAppender(const std::filesystem::path& path, std::size_t slots, bool append)
    : out_(path, append ? std::ios::app : std::ios::trunc), pending_(slots) {
  if (!out_) throw IoError("cannot open manifest " + path.string());
}

void OrderedAppender::submit(std::size_t slot, const ManifestRecord& record) {
  std::lock_guard lock(mutex_);
  pending_.at(slot) = record.to_json_line();
  while (next_ < pending_.size() && pending_[next_]) {
    out_ << *pending_[next_] << '\n';
    pending_[next_].reset();
    ++next_;
  }
  out_.flush();
}

std::size_t OrderedAppender::written() const {
  std::lock_guard lock(mutex_);
  return next_;
}

}  // namespace samf::cli
