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

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covercount/coloring.hpp"
#include "covercount/errors.hpp"
#include "covercount/graph.hpp"
#include "covercount/rng.hpp"

namespace covercount {

namespace detail {

// counts[(v - 1) * (k + 1) + j] = neighbors u of v with z(u) = j, with
// multiplicity.
inline std::vector<std::uint32_t> neighbor_color_counts(
    const MultiGraph& g, std::span<const Color> z, std::size_t k) {
  std::vector<std::uint32_t> counts(g.n() * (k + 1), 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    for (Vertex u : g.neighbors(v)) ++counts[(v - 1) * (k + 1) + z[u - 1]];
  }
  return counts;
}

inline bool stable_given_counts(const std::uint32_t* counts, Color own,
                                std::size_t k) {
  if (own == 0) return false;
  for (Color j = 1; j <= k; ++j) {
    if (j != own && counts[j] < 2) return false;
  }
  return true;
}

}  // namespace detail

/// v is stable under z: z(v) != 0 and every other color j in 1..k appears
/// on at least two neighbors of v (counted with multiplicity).
inline bool is_stable(const MultiGraph& g, const PartialColoring& z,
                      Vertex v) {
  detail::check_size(g, z);
  if (!g.contains(v)) throw DomainError("is_stable: vertex out of range");
  const std::size_t k = z.k();
  std::vector<std::uint32_t> counts(k + 1, 0);
  for (Vertex u : g.neighbors(v)) ++counts[z[u]];
  return detail::stable_given_counts(counts.data(), z[v], k);
}

/// Whitening: repeatedly sets an unstable nonzero vertex to 0 until every
/// nonzero vertex is stable. The fixed point does not depend on the order.
///
/// Worklist implementation, O((n + m) k). Starting from a partial coloring
/// lets callers pre-whiten some vertices.
inline PartialColoring whiten(const MultiGraph& g, const PartialColoring& start) {
  detail::check_size(g, start);
  const std::size_t k = start.k();
  std::vector<Color> z(start.values().begin(), start.values().end());
  auto counts = detail::neighbor_color_counts(g, z, k);
  std::deque<Vertex> queue;
  std::vector<char> queued(g.n() + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (z[v - 1] != 0) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    const Color own = z[v - 1];
    if (own == 0 ||
        detail::stable_given_counts(&counts[(v - 1) * (k + 1)], own, k)) {
      continue;
    }
    z[v - 1] = 0;
    for (Vertex u : g.neighbors(v)) {
      auto* row = &counts[(u - 1) * (k + 1)];
      --row[own];
      ++row[0];
      if (z[u - 1] != 0 && !queued[u]) {
        queue.push_back(u);
        queued[u] = 1;
      }
    }
  }
  return PartialColoring(k, std::move(z));
}

inline PartialColoring whiten(const MultiGraph& g, const Coloring& c) {
  return whiten(g, PartialColoring(c));
}

/// Reference whitening: sweeps the vertices in `order`, zeroing each
/// nonzero vertex that is unstable at the moment it is visited, until a full
/// sweep changes nothing. Stability is recomputed from scratch every time,
/// so this is quadratic; it exists to cross-check whiten().
inline PartialColoring whiten_in_order(const MultiGraph& g,
                                       const PartialColoring& start,
                                       std::span<const Vertex> order) {
  detail::check_size(g, start);
  if (order.size() != g.n()) {
    throw DomainError("whiten_in_order: order must list every vertex");
  }
  const std::size_t k = start.k();
  std::vector<Color> z(start.values().begin(), start.values().end());
  std::vector<std::uint32_t> counts(k + 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : order) {
      if (z[v - 1] == 0) continue;
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex u : g.neighbors(v)) ++counts[z[u - 1]];
      if (!detail::stable_given_counts(counts.data(), z[v - 1], k)) {
        z[v - 1] = 0;
        changed = true;
      }
    }
  }
  return PartialColoring(k, std::move(z));
}

namespace detail {

inline std::size_t differences_in(std::span<const Color> a,
                                   std::span<const Color> b,
                                   std::span<const char> in_f) {
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (in_f[i + 1] && a[i] != b[i]) ++diff;
  }
  return diff;
}

// count >= delta * n, with a small absolute allowance for rounding in
// delta * n.
inline bool reaches(std::size_t count, double delta, std::size_t n) {
  return static_cast<double>(count) + 1e-9 >= delta * static_cast<double>(n);
}

}  // namespace detail

/// F is delta-frozen in c: every proper k-coloring tau that differs from c
/// somewhere on F differs from c on at least delta * n vertices of F.
///
/// Exact: quantifies over all proper colorings by enumeration. Throws
/// ResourceError when more than max_colorings colorings would be visited;
/// the answer is then unknown.
inline bool is_delta_frozen(const MultiGraph& g, const Coloring& c,
                            std::span<const Vertex> f, double delta,
                            std::size_t k,
                            std::size_t max_colorings = 10'000'000) {
  detail::check_size(g, c);
  if (c.k() > k) throw DomainError("is_delta_frozen: coloring uses > k colors");
  if (!(delta >= 0)) throw DomainError("is_delta_frozen: delta must be >= 0");
  const auto in_f = membership(g, f);
  if (f.empty()) return true;
  bool frozen = true;
  bool exceeded = false;
  std::size_t seen = 0;
  for_each_proper(g, k, [&](std::span<const Color> tau) {
    if (++seen > max_colorings) {
      exceeded = true;
      return false;
    }
    const std::size_t diff = detail::differences_in(c.values(), tau, in_f);
    if (diff > 0 && !detail::reaches(diff, delta, g.n())) {
      frozen = false;
      return false;
    }
    return true;
  });
  if (exceeded) {
    throw ResourceError("is_delta_frozen: enumeration budget exceeded",
                        max_colorings);
  }
  return frozen;
}

enum class FrozenVerdict { kFalsified, kNotFalsified };

struct FrozenProbe {
  FrozenVerdict verdict = FrozenVerdict::kNotFalsified;
  /// A proper coloring differing from c on F in 1..ceil(delta n)-1 places.
  std::optional<Coloring> witness;
};

/// Randomized search for a counterexample to delta-frozenness.
///
/// Each attempt forces a random vertex of F to a random other color and
/// completes the coloring by backtracking that keeps c's color whenever
/// possible, pruning once the changes inside F reach delta * n. Never
/// returns "frozen"; absence of a witness is reported as kNotFalsified.
inline FrozenProbe probe_delta_frozen(const MultiGraph& g, const Coloring& c,
                                      std::span<const Vertex> f, double delta,
                                      std::size_t k, std::size_t attempts,
                                      std::uint64_t seed,
                                      std::size_t nodes_per_attempt = 100'000) {
  detail::check_size(g, c);
  const auto in_f = membership(g, f);
  FrozenProbe result;
  if (f.empty() || k < 2) return result;
  const std::size_t n = g.n();
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) return result;
  }
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    Rng rng = make_rng(seed, attempt);
    const Vertex start = f[uniform_below(rng, f.size())];
    Color forced = static_cast<Color>(uniform_below(rng, k - 1) + 1);
    if (forced >= c[start]) ++forced;

    // Breadth-first order from the forced vertex, then the rest.
    std::vector<Vertex> order;
    std::vector<char> placed(n + 1, 0);
    order.push_back(start);
    placed[start] = 1;
    for (std::size_t head = 0; order.size() < n; ++head) {
      if (head == order.size()) {
        for (Vertex v = 1; v <= n; ++v) {
          if (!placed[v]) {
            order.push_back(v);
            placed[v] = 1;
            break;
          }
        }
      }
      for (Vertex u : g.neighbors(order[head])) {
        if (!placed[u]) {
          order.push_back(u);
          placed[u] = 1;
        }
      }
    }

    std::vector<Color> tau(n, 0);
    std::size_t nodes = 0;
    bool found = false;
    auto fits = [&](Vertex v, Color col) {
      for (Vertex u : g.neighbors(v)) {
        if (tau[u - 1] == col) return false;
      }
      return true;
    };
    auto search = [&](auto&& self, std::size_t depth,
                      std::size_t changes) -> void {
      if (found || ++nodes > nodes_per_attempt) return;
      if (depth == n) {
        found = true;
        return;
      }
      const Vertex v = order[depth];
      std::vector<Color> candidates;
      if (depth == 0) {
        candidates.push_back(forced);
      } else {
        candidates.push_back(c[v]);
        std::vector<Color> others;
        for (Color col = 1; col <= k; ++col) {
          if (col != c[v]) others.push_back(col);
        }
        shuffle(others.begin(), others.end(), rng);
        candidates.insert(candidates.end(), others.begin(), others.end());
      }
      for (Color col : candidates) {
        const std::size_t next = changes + ((in_f[v] && col != c[v]) ? 1 : 0);
        if (detail::reaches(next, delta, n)) continue;
        if (!fits(v, col)) continue;
        tau[v - 1] = col;
        self(self, depth + 1, next);
        if (found) return;
        tau[v - 1] = 0;
      }
    };
    search(search, 0, 0);
    if (found) {
      result.verdict = FrozenVerdict::kFalsified;
      result.witness = Coloring(k, std::move(tau));
      return result;
    }
  }
  return result;
}

}  // namespace covercount
