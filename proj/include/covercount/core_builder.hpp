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
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covercount/coloring.hpp"
#include "covercount/errors.hpp"
#include "covercount/graph.hpp"

namespace covercount {

/// Result of the peeling construction for a proper coloring sigma with
/// classes V_1..V_k:
///   W_i  vertices of V_i with fewer than 3*ell neighbors in some V_j, j != i;
///   U    vertices with more than ell neighbors in some W_j;
///   Y    U closed under adding any vertex with >= ell neighbors in Y;
///   core V minus (W union Y).
/// All neighbor counts carry edge multiplicity.
struct CoreDecomposition {
  std::vector<VertexSet> w_per_class;  // [i - 1] holds W_i
  VertexSet w;
  VertexSet u;
  VertexSet y;
  VertexSet core;
  double ell = 0;
};

/// e^{-7} ln k, floored. The unfloored value is below 3 for every k a desk
/// computation can reach, which would leave every core empty.
inline double default_ell(std::size_t k, double floor = 0.0) {
  return std::max(std::exp(-7.0) * std::log(static_cast<double>(k)), floor);
}

/// Core vertices keep >= ell neighbors of every other color; they survive
/// whitening only if that means at least two, i.e. ell >= 2.
inline bool core_survives_whitening(double ell) { return ell >= 2.0; }

namespace detail {

inline VertexSet to_set(const std::vector<char>& flags) {
  VertexSet out;
  for (std::size_t v = 1; v < flags.size(); ++v) {
    if (flags[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

// Y = U, then repeatedly add v outside Y with >= ell neighbors in Y.
inline std::vector<char> close_under_neighbors(const MultiGraph& g,
                                               std::vector<char> in_y,
                                               double ell) {
  std::vector<std::uint32_t> into_y(g.n() + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (in_y[u] && u != v) ++into_y[v];
    }
  }
  std::deque<Vertex> queue;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (!in_y[v] && into_y[v] >= ell) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (in_y[v]) continue;
    in_y[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      if (u == v || in_y[u]) continue;
      if (++into_y[u] >= ell) queue.push_back(u);
    }
  }
  return in_y;
}

}  // namespace detail

/// Comparisons are strict exactly where the definition is (< 3 ell in the
/// first step, > ell in the second) and real-valued ell is compared against
/// integer counts without rounding.
inline CoreDecomposition build_core(const MultiGraph& g, const Coloring& c,
                                    std::size_t k, double ell) {
  if (!(ell > 0)) throw DomainError("build_core: ell must be positive");
  if (c.k() > k) throw DomainError("build_core: coloring uses > k colors");
  if (!is_proper(g, c)) throw DomainError("build_core: coloring not proper");
  const std::size_t n = g.n();

  std::vector<std::uint32_t> to_class(k + 1);
  std::vector<char> in_w(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    std::fill(to_class.begin(), to_class.end(), 0);
    for (Vertex u : g.neighbors(v)) ++to_class[c[u]];
    for (Color j = 1; j <= k; ++j) {
      if (j != c[v] && to_class[j] < 3 * ell) {
        in_w[v] = 1;
        break;
      }
    }
  }

  std::vector<char> in_u(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    std::fill(to_class.begin(), to_class.end(), 0);
    for (Vertex u : g.neighbors(v)) {
      if (in_w[u]) ++to_class[c[u]];
    }
    for (Color j = 1; j <= k; ++j) {
      if (to_class[j] > ell) {
        in_u[v] = 1;
        break;
      }
    }
  }

  const auto in_y = detail::close_under_neighbors(g, in_u, ell);

  CoreDecomposition d;
  d.ell = ell;
  d.w_per_class.resize(k);
  for (Vertex v = 1; v <= n; ++v) {
    if (in_w[v]) d.w_per_class[c[v] - 1].push_back(v);
    if (!in_w[v] && !in_y[v]) d.core.push_back(v);
  }
  d.w = detail::to_set(in_w);
  d.u = detail::to_set(in_u);
  d.y = detail::to_set(in_y);
  return d;
}

/// Every core vertex v has >= ell neighbors inside the core of each color
/// j != c(v).
inline bool core_freeze_check(const MultiGraph& g, const Coloring& c,
                              const CoreDecomposition& d, std::size_t k) {
  detail::check_size(g, c);
  const auto in_core = membership(g, d.core);
  std::vector<std::uint32_t> to_class(k + 1);
  for (Vertex v : d.core) {
    std::fill(to_class.begin(), to_class.end(), 0);
    for (Vertex u : g.neighbors(v)) {
      if (in_core[u]) ++to_class[c[u]];
    }
    for (Color j = 1; j <= k; ++j) {
      if (j != c[v] && to_class[j] < d.ell) return false;
    }
  }
  return true;
}

/// Re-runs the closure step on an existing Y; a closed Y is returned as is.
inline VertexSet close_y(const MultiGraph& g, const VertexSet& y, double ell) {
  std::vector<char> in_y(g.n() + 1, 0);
  for (Vertex v : y) in_y[v] = 1;
  return detail::to_set(detail::close_under_neighbors(g, std::move(in_y), ell));
}

/// ceil(2 n ln ln k / (k ln k)): the set size up to which the expansion
/// property is needed for the frozen-set argument. 0 when ln ln k <= 0.
inline std::size_t frozen_size_bound(std::size_t n, std::size_t k) {
  const double lnk = std::log(static_cast<double>(k));
  const double lnlnk = std::log(lnk);
  if (!(lnlnk > 0)) return 0;
  return static_cast<std::size_t>(
      std::ceil(2.0 * static_cast<double>(n) * lnlnk /
                (static_cast<double>(k) * lnk)));
}

/// delta = 1 / (k ln k), the frozen-set separation.
inline double frozen_delta(std::size_t k) {
  const double kd = static_cast<double>(k);
  return 1.0 / (kd * std::log(kd));
}

enum class ExpansionVerdict {
  kViolation,    // witness holds a set Y with e(Y) >= (ell/2)|Y|
  kNone,         // no such set within the size bound
  kInconclusive  // peeling could not rule one out
};

inline const char* to_string(ExpansionVerdict v) {
  switch (v) {
    case ExpansionVerdict::kViolation: return "violation";
    case ExpansionVerdict::kNone: return "none";
    case ExpansionVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

struct ExpansionResult {
  ExpansionVerdict verdict = ExpansionVerdict::kInconclusive;
  std::optional<VertexSet> witness;
  bool exact = false;
};

/// Thrown when the exhaustive search exceeds its node budget; carries the
/// one-sided peeling verdict.
class ExpansionBudgetExceeded : public ResourceError {
 public:
  ExpansionBudgetExceeded(std::size_t budget, ExpansionResult partial)
      : ResourceError("expansion_violation: search budget exceeded", budget),
        partial_(std::move(partial)) {}

  const ExpansionResult& partial() const noexcept { return partial_; }

 private:
  ExpansionResult partial_;
};

/// Peeling certificate. Removing a vertex with fewer than ell/2 edges into
/// the remaining set keeps e(R) - (ell/2)|R| strictly increasing, so every
/// set Y with e(Y) >= (ell/2)|Y| keeps a nonempty subset that survives the
/// peel. An empty peel therefore rules out violations of every size; a
/// nonempty one decides nothing.
inline ExpansionResult expansion_peel(const MultiGraph& g, double ell) {
  const std::size_t n = g.n();
  std::vector<char> alive(n + 1, 1);
  alive[0] = 0;
  // Edges incident to v inside the alive set; a loop counts once.
  std::vector<double> inner(n + 1, 0);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      inner[e.u] += 1;
    } else {
      inner[e.u] += 1;
      inner[e.v] += 1;
    }
  }
  std::deque<Vertex> queue;
  for (Vertex v = 1; v <= n; ++v) {
    if (inner[v] < ell / 2) queue.push_back(v);
  }
  std::size_t remaining = n;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = 0;
    --remaining;
    for (Vertex u : g.neighbors(v)) {
      if (u == v || !alive[u]) continue;
      inner[u] -= 1;
      if (inner[u] < ell / 2) queue.push_back(u);
    }
  }
  ExpansionResult r;
  r.exact = false;
  r.verdict = remaining == 0 ? ExpansionVerdict::kNone
                             : ExpansionVerdict::kInconclusive;
  return r;
}

enum class ExpansionMode { kExact, kPeeling };

/// Searches for a nonempty Y with |Y| <= max_size and e(Y) >= (ell/2)|Y|.
///
/// Exact mode walks subsets in lexicographic order (so the reported witness
/// is the lexicographically least violating set), pruning a branch when
/// even the best completion cannot reach density ell/2. It visits at most
/// node_budget subsets and otherwise throws ExpansionBudgetExceeded.
inline ExpansionResult expansion_violation(
    const MultiGraph& g, double ell, std::size_t max_size,
    ExpansionMode mode = ExpansionMode::kExact,
    std::size_t node_budget = 50'000'000) {
  if (!(ell > 0)) throw DomainError("expansion_violation: ell must be > 0");
  if (mode == ExpansionMode::kPeeling) return expansion_peel(g, ell);

  const std::size_t n = g.n();
  const double half = ell / 2;
  std::vector<std::uint32_t> loops(n + 1, 0);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) ++loops[e.u];
  }
  // Edge ends from each vertex into the current set S (loops excluded).
  std::vector<std::uint32_t> into_s(n + 1, 0);
  std::vector<Vertex> chosen;
  std::size_t nodes = 0;
  bool exceeded = false;
  std::optional<VertexSet> witness;
  std::vector<double> gains;

  auto add = [&](Vertex v, int delta) {
    for (Vertex u : g.neighbors(v)) {
      if (u != v) into_s[u] += delta;
    }
  };

  // Upper bound on max over T subset of {> last}, |T| <= room, of
  // e(S+T) - half |S+T|. Edges inside T are split evenly between their
  // endpoints so each candidate gets an independent gain.
  auto bound = [&](Vertex last, std::size_t room, double slack) {
    gains.clear();
    for (Vertex t = last + 1; t <= n; ++t) {
      double inside = 0;
      for (Vertex u : g.neighbors(t)) {
        if (u > last && u != t) inside += 0.5;
      }
      const double gain = into_s[t] + loops[t] + inside - half;
      if (gain > 0) gains.push_back(gain);
    }
    const std::size_t take = std::min(room, gains.size());
    std::partial_sort(gains.begin(), gains.begin() + take, gains.end(),
                      std::greater<>());
    for (std::size_t i = 0; i < take; ++i) slack += gains[i];
    return slack;
  };

  auto search = [&](auto&& self, Vertex last, std::size_t edges) -> void {
    if (witness || exceeded) return;
    if (++nodes > node_budget) {
      exceeded = true;
      return;
    }
    const double slack =
        static_cast<double>(edges) - half * static_cast<double>(chosen.size());
    if (!chosen.empty() && slack >= 0) {
      witness = VertexSet(chosen.begin(), chosen.end());
      return;
    }
    const std::size_t room = max_size - chosen.size();
    if (room == 0 || bound(last, room, slack) < 0) return;
    for (Vertex v = last + 1; v <= n && !witness && !exceeded; ++v) {
      const std::size_t next = edges + into_s[v] + loops[v];
      chosen.push_back(v);
      add(v, +1);
      self(self, v, next);
      add(v, -1);
      chosen.pop_back();
    }
  };
  search(search, 0, 0);

  if (exceeded) throw ExpansionBudgetExceeded(node_budget, expansion_peel(g, ell));
  ExpansionResult r;
  r.exact = true;
  r.verdict = witness ? ExpansionVerdict::kViolation : ExpansionVerdict::kNone;
  r.witness = std::move(witness);
  return r;
}

}  // namespace covercount
