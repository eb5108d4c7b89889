#include "samf/config.hpp"

#include <cstdio>

#include "json.hpp"
#include "samf/error.hpp"

namespace samf {

namespace {

using Json = nlohmann::ordered_json;

void check(bool ok, const char* message) {
  if (!ok) throw ParameterError(message);
}

bool odd_at_least_3(int w) { return w >= 3 && w % 2 == 1; }

Json to_object(const FusionConfig& c) {
  Json j;
  j["num_scales"] = c.num_scales;
  j["gauss_sigma"] = c.gauss_sigma;
  j["log_energy_threshold"] = c.log_energy_threshold ? Json(*c.log_energy_threshold) : Json(nullptr);
  j["balance_beta"] = c.balance_beta;
  j["ssim_window"] = c.ssim_window;
  j["rf_sigma_s"] = c.rf.sigma_s;
  j["rf_sigma_r"] = c.rf.sigma_r;
  j["rf_iterations"] = c.rf.iterations;
  j["consistency_window"] = c.consistency_window;
  j["consistency_passes"] = c.consistency_passes;
  j["consistency_min_area"] = c.consistency_min_area;
  return j;
}

template <typename T>
T get_as(const Json& value, const std::string& key) {
  if constexpr (std::is_same_v<T, int>) {
    if (!value.is_number_integer()) throw ParameterError("config key '" + key + "' must be an integer");
  } else {
    if (!value.is_number()) throw ParameterError("config key '" + key + "' must be a number");
  }
  return value.get<T>();
}

}  // namespace

void RfParams::validate() const {
  check(sigma_s > 0.0, "rf_sigma_s must be > 0");
  check(sigma_r > 0.0, "rf_sigma_r must be > 0");
  check(iterations >= 1, "rf_iterations must be >= 1");
}

void FusionConfig::validate() const {
  check(num_scales >= 1, "num_scales must be >= 1");
  check(gauss_sigma > 0.0, "gauss_sigma must be > 0");
  check(!log_energy_threshold || *log_energy_threshold >= 0.0, "log_energy_threshold must be >= 0");
  check(balance_beta > 0.0 && balance_beta <= 1.0, "balance_beta must lie in (0, 1]");
  check(odd_at_least_3(ssim_window), "ssim_window must be odd and >= 3");
  check(odd_at_least_3(consistency_window), "consistency_window must be odd and >= 3");
  check(consistency_passes >= 0, "consistency_passes must be >= 0");
  check(consistency_min_area >= 0.0 && consistency_min_area < 1.0, "consistency_min_area must lie in [0, 1)");
  rf.validate();
}

std::string FusionConfig::to_json(int indent) const { return to_object(*this).dump(indent); }

FusionConfig FusionConfig::from_json(const std::string& text) {
  FusionConfig cfg;
  cfg.merge_json(text);
  return cfg;
}

void FusionConfig::merge_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config must be a JSON object");

  for (const auto& [key, value] : j.items()) {
    if (key == "num_scales") {
      num_scales = get_as<int>(value, key);
    } else if (key == "gauss_sigma") {
      gauss_sigma = get_as<double>(value, key);
    } else if (key == "log_energy_threshold") {
      if (value.is_null()) {
        log_energy_threshold.reset();
      } else {
        log_energy_threshold = get_as<double>(value, key);
      }
    } else if (key == "balance_beta") {
      balance_beta = get_as<double>(value, key);
    } else if (key == "ssim_window") {
      ssim_window = get_as<int>(value, key);
    } else if (key == "rf_sigma_s") {
      rf.sigma_s = get_as<double>(value, key);
    } else if (key == "rf_sigma_r") {
      rf.sigma_r = get_as<double>(value, key);
    } else if (key == "rf_iterations") {
      rf.iterations = get_as<int>(value, key);
    } else if (key == "consistency_window") {
      consistency_window = get_as<int>(value, key);
    } else if (key == "consistency_passes") {
      consistency_passes = get_as<int>(value, key);
    } else if (key == "consistency_min_area") {
      consistency_min_area = get_as<double>(value, key);
    } else {
      throw ParameterError("unknown config key '" + key + "'");
    }
  }
}

std::string FusionConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace samf
