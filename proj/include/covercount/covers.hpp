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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covercount/coloring.hpp"
#include "covercount/errors.hpp"
#include "covercount/graph.hpp"
#include "covercount/whitening.hpp"

namespace covercount {

enum class CoverAxiom { kNone, kCV1, kCV2, kCV3 };

inline const char* to_string(CoverAxiom axiom) {
  switch (axiom) {
    case CoverAxiom::kNone: return "none";
    case CoverAxiom::kCV1: return "CV1";
    case CoverAxiom::kCV2: return "CV2";
    case CoverAxiom::kCV3: return "CV3";
  }
  return "?";
}

/// Outcome of is_cover(). Converts to true iff all three axioms hold;
/// otherwise names the first violated axiom with a witness.
struct CoverCheck {
  CoverAxiom violated = CoverAxiom::kNone;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;

  explicit operator bool() const { return violated == CoverAxiom::kNone; }
};

/// k-cover axioms:
///   CV1  no edge joins two vertices with the same nonzero value;
///   CV2  every nonzero vertex is stable;
///   CV3  every zero vertex v has colors i != j in 1..k such that v has no
///        neighbor colored i and at most one neighbor colored j.
/// Checked in that order; the first failure is reported.
inline CoverCheck is_cover(const MultiGraph& g, const PartialColoring& z,
                           std::size_t k) {
  detail::check_size(g, z);
  for (Color c : z.values()) {
    if (c > k) throw DomainError("is_cover: value outside 0..k");
  }
  for (const Edge& e : g.edges()) {
    if (z[e.u] != 0 && z[e.u] == z[e.v]) {
      return {CoverAxiom::kCV1, e.u, e};
    }
  }
  const auto counts = detail::neighbor_color_counts(g, z.values(), k);
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (z[v] != 0 &&
        !detail::stable_given_counts(&counts[(v - 1) * (k + 1)], z[v], k)) {
      return {CoverAxiom::kCV2, v, std::nullopt};
    }
  }
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (z[v] != 0) continue;
    const std::uint32_t* row = &counts[(v - 1) * (k + 1)];
    std::size_t absent = 0;
    std::size_t single = 0;
    for (Color j = 1; j <= k; ++j) {
      if (row[j] == 0) ++absent;
      if (row[j] == 1) ++single;
    }
    // i must be absent; j != i needs at most one neighbor, so either a
    // second absent color or a color seen exactly once.
    const bool ok = absent >= 2 || (absent == 1 && single >= 1);
    if (!ok) return {CoverAxiom::kCV3, v, std::nullopt};
  }
  return {};
}

/// Proper k-colorings grouped by their whitening image.
///
/// Keys are exactly the valid covers of the graph, kept in lexicographic
/// order; each cluster lists its colorings in lexicographic order.
struct CoverCensus {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::pair<PartialColoring, std::vector<Coloring>>> clusters;

  std::size_t cover_count() const { return clusters.size(); }

  std::size_t coloring_count() const {
    std::size_t total = 0;
    for (const auto& [cover, members] : clusters) total += members.size();
    return total;
  }
};

/// Throws ResourceError beyond max_colorings proper colorings.
inline CoverCensus valid_cover_census(const MultiGraph& g, std::size_t k,
                                      std::size_t max_colorings = 1'000'000) {
  std::map<PartialColoring, std::vector<Coloring>> groups;
  for (Coloring& c : enumerate_proper(g, k, max_colorings)) {
    auto cover = whiten(g, c);
    groups[std::move(cover)].push_back(std::move(c));
  }
  CoverCensus census{g.n(), k, {}};
  census.clusters.reserve(groups.size());
  for (auto& [cover, members] : groups) {
    census.clusters.emplace_back(cover, std::move(members));
  }
  return census;
}

inline std::size_t hamming_distance(const Coloring& a, const Coloring& b) {
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (a.values()[i] != b.values()[i]) ++diff;
  }
  return diff;
}

/// Minimum Hamming distance between colorings in different clusters;
/// nullopt when the census has fewer than two clusters.
inline std::optional<std::size_t> cluster_separation(const CoverCensus& census) {
  if (census.clusters.size() < 2) return std::nullopt;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto& cl = census.clusters;
  for (std::size_t a = 0; a < cl.size(); ++a) {
    for (std::size_t b = a + 1; b < cl.size(); ++b) {
      for (const Coloring& x : cl[a].second) {
        for (const Coloring& y : cl[b].second) {
          best = std::min(best, hamming_distance(x, y));
        }
      }
    }
  }
  return best;
}

/// Profile conditions on a cover with nu_i = |z^{-1}(i)|:
///   Z1  nu_0 <= n k^{-2/3};
///   Z2  max_i |nu_i k / n - 1| <= balance_slack over colors i >= 1;
///   Z3  #{i >= 1 : |nu_i - n/k| > n/(k ln^3 k)} <= ln^9 k.
/// Z2 is asymptotic ("(1 + o(1)) n/k"), hence the explicit slack.
struct CoverProfileReport {
  std::size_t zeros = 0;
  double zeros_threshold = 0;
  bool z1 = false;

  double max_ratio_deviation = 0;
  double balance_slack = 0;
  bool z2 = false;

  std::vector<double> deviations;
  double deviation_threshold = 0;
  std::size_t violations = 0;
  double allowed_violations = 0;
  bool z3 = false;

  bool all() const { return z1 && z2 && z3; }
};

inline constexpr double kDefaultBalanceSlack = 0.5;

inline CoverProfileReport check_cover_profile(
    std::span<const std::size_t> nu, std::size_t n, std::size_t k,
    double balance_slack = kDefaultBalanceSlack) {
  if (k < 2) throw DomainError("check_cover_profile: k must be >= 2");
  if (nu.size() != k + 1) {
    throw DomainError("check_cover_profile: need nu_0..nu_k");
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double lnk = std::log(kd);
  CoverProfileReport r;
  r.zeros = nu[0];
  r.zeros_threshold = nd * std::pow(kd, -2.0 / 3.0);
  r.z1 = static_cast<double>(r.zeros) <= r.zeros_threshold;

  r.balance_slack = balance_slack;
  r.deviation_threshold = nd / (kd * std::pow(lnk, 3));
  r.allowed_violations = std::pow(lnk, 9);
  for (std::size_t i = 1; i <= k; ++i) {
    const double size = static_cast<double>(nu[i]);
    if (n > 0) {
      r.max_ratio_deviation =
          std::max(r.max_ratio_deviation, std::abs(size * kd / nd - 1));
    }
    const double dev = std::abs(size - nd / kd);
    r.deviations.push_back(dev);
    if (dev > r.deviation_threshold) ++r.violations;
  }
  r.z2 = r.max_ratio_deviation <= balance_slack;
  r.z3 = static_cast<double>(r.violations) <= r.allowed_violations;
  return r;
}

inline CoverProfileReport check_cover_profile(
    const PartialColoring& z, std::size_t n, std::size_t k,
    double balance_slack = kDefaultBalanceSlack) {
  if (z.n() != n) throw DomainError("check_cover_profile: size mismatch");
  std::vector<std::size_t> nu(k + 1, 0);
  for (Color c : z.values()) {
    if (c > k) throw DomainError("check_cover_profile: value outside 0..k");
    ++nu[c];
  }
  return check_cover_profile(nu, n, k, balance_slack);
}

}  // namespace covercount
