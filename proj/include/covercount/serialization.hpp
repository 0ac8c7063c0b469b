// Copyright 2026 The covercount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include <nlohmann/json.hpp>

#include "covercount/coloring.hpp"
#include "covercount/core_builder.hpp"
#include "covercount/covers.hpp"
#include "covercount/moments.hpp"

namespace covercount {

using nlohmann::json;

template <Color min_color>
json colors_to_json(const BasicColoring<min_color>& c) {
  return json(std::vector<Color>(c.values().begin(), c.values().end()));
}

/// {"n", "k", "clusters": [{"cover", "cluster_size", "colorings"?}]}
inline json census_to_json(const CoverCensus& census, bool with_colorings) {
  json clusters = json::array();
  for (const auto& [cover, members] : census.clusters) {
    json entry;
    entry["cover"] = colors_to_json(cover);
    entry["cluster_size"] = members.size();
    if (with_colorings) {
      json list = json::array();
      for (const Coloring& c : members) list.push_back(colors_to_json(c));
      entry["colorings"] = std::move(list);
    }
    clusters.push_back(std::move(entry));
  }
  return {{"n", census.n}, {"k", census.k}, {"clusters", std::move(clusters)}};
}

inline json core_to_json(const CoreDecomposition& d) {
  return {{"ell", d.ell},       {"W_per_class", d.w_per_class},
          {"W", d.w},           {"U", d.u},
          {"Y", d.y},           {"core", d.core}};
}

inline json cover_check_to_json(const CoverCheck& check) {
  json out{{"is_cover", static_cast<bool>(check)},
           {"violated", to_string(check.violated)}};
  if (check.vertex) out["vertex"] = *check.vertex;
  if (check.edge) out["edge"] = {check.edge->u, check.edge->v};
  return out;
}

inline json cover_profile_to_json(const CoverProfileReport& r) {
  return {{"zeros", r.zeros},
          {"zeros_threshold", r.zeros_threshold},
          {"z1", r.z1},
          {"max_ratio_deviation", r.max_ratio_deviation},
          {"balance_slack", r.balance_slack},
          {"z2", r.z2},
          {"deviation_threshold", r.deviation_threshold},
          {"violations", r.violations},
          {"allowed_violations", r.allowed_violations},
          {"z3", r.z3}};
}

inline json balance_to_json(const BalanceReport& r) {
  json out{{"deviations", r.deviations},
           {"max_deviation", r.max_deviation},
           {"deviation_threshold", r.deviation_threshold},
           {"violations", r.violations},
           {"allowed_violations", r.allowed_violations},
           {"pass", r.pass},
           {"max_ratio_deviation", r.max_ratio_deviation}};
  if (r.within_slack) out["within_slack"] = *r.within_slack;
  return out;
}

/// Column names k, d_first, d_AN, d_second, d_cavity, d_cover; d_cover is
/// null when no crossing was found.
inline json bounds_to_json(const BoundsRow& row) {
  json out{{"k", row.k},
           {"d_first", row.d_first},
           {"d_AN", row.d_an},
           {"d_second", row.d_second},
           {"d_second_omits_little_o", row.d_second_omits_little_o},
           {"d_cavity", row.d_cavity},
           {"d_cover", nullptr}};
  if (row.d_cover) out["d_cover"] = *row.d_cover;
  if (!row.d_cover_note.empty()) out["d_cover_note"] = row.d_cover_note;
  return out;
}

}  // namespace covercount
