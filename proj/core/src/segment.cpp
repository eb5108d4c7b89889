#include "samf/segment.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "samf/error.hpp"
#include "samf/imgproc.hpp"
#include "samf/recursive_filter.hpp"

namespace samf {

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::Tmp: return "TMP";
    case Stage::Omp: return "OMP";
    case Stage::Rmp: return "RMP";
    case Stage::Fmp: return "FMP";
  }
  return "?";
}

bool DecisionMap::is_level(Stage stage, double v) {
  switch (stage) {
    case Stage::Tmp:
    case Stage::Omp: return v == 0.0 || v == 1.0;
    case Stage::Rmp: return v == kUncertain || v == 1.0 || v == kDefocused;
    case Stage::Fmp: return v == 0.0 || v == kUncertain || v == 1.0;
  }
  return false;
}

DecisionMap::DecisionMap(Stage stage, GrayImage levels) : stage_(stage), levels_(std::move(levels)) {
  for (double v : levels_.pixels()) {
    if (!is_level(stage_, v)) {
      throw ParameterError("value " + std::to_string(v) + " is not a " + std::string(stage_name(stage_)) + " level");
    }
  }
}

DecisionMap::DecisionMap(Stage stage, Size size, double fill) : DecisionMap(stage, GrayImage(size, fill)) {}

Mask DecisionMap::to_mask() const {
  if (stage_ != Stage::Tmp && stage_ != Stage::Omp) {
    throw ParameterError(std::string(stage_name(stage_)) + " is not a binary stage");
  }
  Mask m(size());
  for (std::size_t i = 0; i < pixel_count(); ++i) m[i] = levels_[i] == 1.0 ? 1 : 0;
  return m;
}

DecisionMap DecisionMap::from_mask(Stage stage, const Mask& mask) {
  GrayImage levels(mask.size());
  for (std::size_t i = 0; i < mask.pixel_count(); ++i) levels[i] = mask[i] ? 1.0 : 0.0;
  return DecisionMap(stage, std::move(levels));
}

double DecisionMap::fraction(double level) const {
  const auto px = levels_.pixels();
  return static_cast<double>(std::count(px.begin(), px.end(), level)) / static_cast<double>(px.size());
}

std::uint8_t DecisionMap::display_value(double level) {
  if (level == 0.0) return 0;
  if (level == kUncertain) return 128;
  if (level == kDefocused) return 64;
  return 255;
}

DecisionMap two_region(const GrayImage& b1, const GrayImage& b2) {
  require_same_size(b1.size(), b2.size(), "two_region");
  GrayImage levels(b1.size());
  for (std::size_t i = 0; i < levels.pixel_count(); ++i) levels[i] = b1[i] >= b2[i] ? 1.0 : 0.0;
  return DecisionMap(Stage::Tmp, std::move(levels));
}

Mask remove_small_regions(const Mask& mask, double min_area) {
  const Components regions = label_uniform_regions(mask, Connectivity::Eight);
  const int n = regions.count();
  const int w = mask.width();
  const int h = mask.height();

  // Index 0 is unused so region ids index directly.
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::vector<std::int64_t> area(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::uint8_t> value(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::set<int>> adjacent(static_cast<std::size_t>(n) + 1);
  for (int r = 1; r <= n; ++r) {
    parent[static_cast<std::size_t>(r)] = r;
    area[static_cast<std::size_t>(r)] = regions.areas[static_cast<std::size_t>(r - 1)];
  }

  const auto label_at = [&](int x, int y) {
    return regions.labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)];
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int a = label_at(x, y);
      value[static_cast<std::size_t>(a)] = mask(x, y);
      const int nb[4][2] = {{x + 1, y}, {x - 1, y + 1}, {x, y + 1}, {x + 1, y + 1}};
      for (const auto& [nx, ny] : nb) {
        if (nx < 0 || nx >= w || ny >= h) continue;
        const int b = label_at(nx, ny);
        if (b != a) {
          adjacent[static_cast<std::size_t>(a)].insert(b);
          adjacent[static_cast<std::size_t>(b)].insert(a);
        }
      }
    }
  }

  const auto find = [&](int r) {
    while (parent[static_cast<std::size_t>(r)] != r) {
      parent[static_cast<std::size_t>(r)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(r)])];
      r = parent[static_cast<std::size_t>(r)];
    }
    return r;
  };

  using Entry = std::pair<std::int64_t, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (int r = 1; r <= n; ++r) queue.emplace(area[static_cast<std::size_t>(r)], r);

  while (!queue.empty()) {
    const auto [a, r] = queue.top();
    queue.pop();
    if (find(r) != r || area[static_cast<std::size_t>(r)] != a) continue;  // stale entry
    if (static_cast<double>(a) >= min_area) break;
    auto& own = adjacent[static_cast<std::size_t>(r)];
    if (own.empty()) continue;

    // Flipping r makes it the colour of every neighbour, fusing them all.
    std::vector<int> members{r};
    members.insert(members.end(), own.begin(), own.end());
    const int root = *std::min_element(members.begin(), members.end());
    const std::uint8_t merged_value = value[static_cast<std::size_t>(*own.begin())];

    std::set<int> merged_adjacent;
    std::int64_t merged_area = 0;
    for (int m : members) {
      merged_area += area[static_cast<std::size_t>(m)];
      if (m != r) {
        for (int q : adjacent[static_cast<std::size_t>(m)]) merged_adjacent.insert(q);
      }
    }
    for (int m : members) merged_adjacent.erase(m);
    for (int m : members) {
      parent[static_cast<std::size_t>(m)] = root;
      if (m != root) adjacent[static_cast<std::size_t>(m)].clear();
    }
    for (int q : merged_adjacent) {
      auto& links = adjacent[static_cast<std::size_t>(q)];
      for (int m : members) links.erase(m);
      links.insert(root);
    }
    adjacent[static_cast<std::size_t>(root)] = std::move(merged_adjacent);
    area[static_cast<std::size_t>(root)] = merged_area;
    value[static_cast<std::size_t>(root)] = merged_value;
    queue.emplace(merged_area, root);
  }

  Mask out(mask.size());
  for (std::size_t i = 0; i < mask.pixel_count(); ++i) {
    out[i] = value[static_cast<std::size_t>(find(regions.labels[i]))];
  }
  return out;
}

Mask majority_vote(const Mask& mask, int window) {
  if (window < 1 || window % 2 == 0) throw ParameterError("majority window must be odd");
  const int w = mask.width();
  const int h = mask.height();
  const int r = window / 2;
  const int pw = w + 2 * r;
  const int ph = h + 2 * r;

  // Summed-area table over the mirror-padded mask, one guard row/column.
  std::vector<std::int32_t> sat(static_cast<std::size_t>(pw + 1) * static_cast<std::size_t>(ph + 1), 0);
  const auto at = [&](int x, int y) -> std::int32_t& {
    return sat[static_cast<std::size_t>(y) * static_cast<std::size_t>(pw + 1) + static_cast<std::size_t>(x)];
  };
  for (int y = 0; y < ph; ++y) {
    const int sy = mirror_index(y - r, h);
    std::int32_t run = 0;
    for (int x = 0; x < pw; ++x) {
      run += mask(mirror_index(x - r, w), sy);
      at(x + 1, y + 1) = at(x + 1, y) + run;
    }
  }

  const std::int64_t half = static_cast<std::int64_t>(window) * window / 2;
  Mask out(mask.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      // Window in padded coordinates spans [x, x + window) x [y, y + window).
      const std::int64_t ones = at(x + window, y + window) - at(x, y + window) - at(x + window, y) + at(x, y);
      out(x, y) = ones > half ? 1 : 0;
    }
  }
  return out;
}

DecisionMap consistency_verify(const DecisionMap& tmp, const FusionConfig& cfg) {
  Mask m = tmp.to_mask();
  const double min_area = cfg.consistency_min_area * static_cast<double>(m.pixel_count());
  m = remove_small_regions(m, min_area);
  for (int pass = 0; pass < cfg.consistency_passes; ++pass) m = majority_vote(m, cfg.consistency_window);
  return DecisionMap::from_mask(Stage::Omp, m);
}

DiffMaps diff_maps(const GrayImage& scm1, const GrayImage& scm2, const GrayImage& b1, const GrayImage& b2,
                   const GrayImage& guide_avg, const RfParams& rf) {
  require_same_size(scm1.size(), scm2.size(), "diff_maps score maps");
  require_same_size(b1.size(), b2.size(), "diff_maps filtered maps");
  require_same_size(scm1.size(), b1.size(), "diff_maps");
  DiffMaps out;
  out.dm = GrayImage(scm1.size());
  out.bdm = GrayImage(scm1.size());
  for (std::size_t i = 0; i < scm1.pixel_count(); ++i) {
    out.dm[i] = std::abs(scm1[i] - scm2[i]);
    out.bdm[i] = std::abs(b1[i] - b2[i]);
  }
  out.dbm = recursive_filter(out.dm, guide_avg, rf);
  return out;
}

DecisionMap three_region(const DiffMaps& dm, const GrayImage& b1, const GrayImage& b2, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw ParameterError("beta must lie in (0, 1]");
  require_same_size(dm.bdm.size(), dm.dbm.size(), "three_region");
  require_same_size(b1.size(), b2.size(), "three_region");
  require_same_size(b1.size(), dm.bdm.size(), "three_region");
  GrayImage levels(b1.size());
  for (std::size_t i = 0; i < levels.pixel_count(); ++i) {
    if (dm.bdm[i] > beta * dm.dbm[i]) {
      levels[i] = b1[i] > b2[i] ? 1.0 : DecisionMap::kDefocused;
    } else {
      levels[i] = DecisionMap::kUncertain;
    }
  }
  return DecisionMap(Stage::Rmp, std::move(levels));
}

DecisionMap final_map(const DecisionMap& omp, const DecisionMap& rmp) {
  if (omp.stage() != Stage::Omp && omp.stage() != Stage::Tmp) throw ParameterError("final_map expects a binary map");
  if (rmp.stage() != Stage::Rmp) throw ParameterError("final_map expects a three-region map");
  require_same_size(omp.size(), rmp.size(), "final_map");
  GrayImage levels(omp.size());
  for (std::size_t i = 0; i < levels.pixel_count(); ++i) {
    if (omp[i] == 1.0 && rmp[i] == 1.0) {
      levels[i] = 1.0;
    } else if (omp[i] == 0.0 && rmp[i] == DecisionMap::kDefocused) {
      levels[i] = 0.0;
    } else {
      levels[i] = DecisionMap::kUncertain;
    }
  }
  return DecisionMap(Stage::Fmp, std::move(levels));
}

}  // namespace samf
