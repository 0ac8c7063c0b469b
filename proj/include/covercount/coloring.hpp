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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "covercount/errors.hpp"
#include "covercount/graph.hpp"
#include "covercount/rng.hpp"

namespace covercount {

using Color = std::uint32_t;

/// Total map vertex -> color, with colors in min_color..k.
///
/// min_color = 1 gives a k-coloring; min_color = 0 gives a partial coloring
/// where 0 is the joker color.
template <Color min_color>
class BasicColoring {
 public:
  BasicColoring() = default;

  BasicColoring(std::size_t k, std::vector<Color> colors)
      : k_(k), colors_(std::move(colors)) {
    for (Color c : colors_) {
      if (c < min_color || c > k_) {
        throw DomainError("color " + std::to_string(c) + " outside " +
                          std::to_string(min_color) + ".." +
                          std::to_string(k_));
      }
    }
  }

  /// Widening conversion: every coloring is a partial coloring.
  template <Color other>
    requires(other > min_color)
  BasicColoring(const BasicColoring<other>& c)  // NOLINT(runtime/explicit)
      : k_(c.k()), colors_(c.values().begin(), c.values().end()) {}

  std::size_t n() const noexcept { return colors_.size(); }
  std::size_t k() const noexcept { return k_; }

  Color operator[](Vertex v) const { return colors_[v - 1]; }
  std::span<const Color> values() const noexcept { return colors_; }

  /// Class sizes; index c holds |{v : color(v) = c}| for c in 0..k (index 0
  /// is always 0 for a full coloring).
  std::vector<std::size_t> class_sizes() const {
    std::vector<std::size_t> sizes(k_ + 1, 0);
    for (Color c : colors_) ++sizes[c];
    return sizes;
  }

  /// Vertices of color c, sorted.
  VertexSet color_class(Color c) const {
    VertexSet out;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (colors_[i] == c) out.push_back(static_cast<Vertex>(i + 1));
    }
    return out;
  }

  friend bool operator==(const BasicColoring&, const BasicColoring&) = default;
  friend auto operator<=>(const BasicColoring& a, const BasicColoring& b) {
    return a.colors_ <=> b.colors_;
  }

 private:
  std::size_t k_ = 0;
  std::vector<Color> colors_;
};

using Coloring = BasicColoring<1>;
using PartialColoring = BasicColoring<0>;

/// Class-size profile nu with alpha = nu / n.
struct ClassProfile {
  std::vector<std::size_t> nu;

  std::size_t n() const {
    std::size_t total = 0;
    for (auto x : nu) total += x;
    return total;
  }

  std::vector<double> alpha() const {
    const auto total = static_cast<double>(n());
    std::vector<double> out;
    out.reserve(nu.size());
    for (auto x : nu) out.push_back(static_cast<double>(x) / total);
    return out;
  }
};

/// nu_1..nu_k of a coloring.
inline ClassProfile profile_of(const Coloring& c) {
  auto sizes = c.class_sizes();
  return {std::vector<std::size_t>(sizes.begin() + 1, sizes.end())};
}

/// nu_0..nu_k of a partial coloring.
inline ClassProfile profile_of(const PartialColoring& z) {
  return {z.class_sizes()};
}

namespace detail {

template <Color min_color>
void check_size(const MultiGraph& g, const BasicColoring<min_color>& c) {
  if (c.n() != g.n()) {
    throw DomainError("coloring has " + std::to_string(c.n()) +
                      " entries, graph has " + std::to_string(g.n()) +
                      " vertices");
  }
}

}  // namespace detail

/// No edge (loops included) joins two vertices of equal color.
inline bool is_proper(const MultiGraph& g, const Coloring& c) {
  detail::check_size(g, c);
  for (const Edge& e : g.edges()) {
    if (c[e.u] == c[e.v]) return false;
  }
  return true;
}

/// Calls visit(std::span<const Color>) once per proper k-coloring of g, in
/// lexicographic order of the assignment vector. If visit returns bool,
/// returning false stops the enumeration. Returns the number visited.
///
/// Backtracking over vertices 1..n with forward checking: assigning a color
/// removes it from the domains of later neighbors, and a wiped-out domain
/// prunes the branch. Exponential; meant for n up to ~20.
template <typename Visitor>
std::uint64_t for_each_proper(const MultiGraph& g, std::size_t k,
                              Visitor&& visit) {
  const std::size_t n = g.n();
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) return 0;
  }
  if (k == 0) {
    if (n != 0) return 0;
  }
  std::vector<Color> colors(n, 0);
  // blocked[i * (k + 1) + c]: earlier neighbors of vertex i+1 colored c.
  std::vector<std::uint32_t> blocked(n * (k + 1), 0);
  std::vector<std::uint32_t> domain(n, static_cast<std::uint32_t>(k));
  std::uint64_t visited = 0;
  bool stop = false;

  auto assign = [&](std::size_t i, Color c, int delta) -> bool {
    bool wiped = false;
    for (Vertex u : g.neighbors(static_cast<Vertex>(i + 1))) {
      const std::size_t j = u - 1;
      if (j <= i) continue;
      auto& slot = blocked[j * (k + 1) + c];
      if (delta > 0) {
        if (slot++ == 0 && --domain[j] == 0) wiped = true;
      } else {
        if (--slot == 0) ++domain[j];
      }
    }
    return !wiped;
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++visited;
      std::span<const Color> view(colors);
      if constexpr (std::is_same_v<std::invoke_result_t<Visitor&,
                                                        std::span<const Color>>,
                                   bool>) {
        if (!visit(view)) stop = true;
      } else {
        visit(view);
      }
      return;
    }
    for (Color c = 1; c <= k && !stop; ++c) {
      if (blocked[i * (k + 1) + c] != 0) continue;
      colors[i] = c;
      if (assign(i, c, +1)) self(self, i + 1);
      assign(i, c, -1);
    }
    colors[i] = 0;
  };
  recurse(recurse, 0);
  return visited;
}

/// All proper k-colorings in lexicographic order. Throws ResourceError if
/// there are more than max_colorings of them.
inline std::vector<Coloring> enumerate_proper(
    const MultiGraph& g, std::size_t k,
    std::size_t max_colorings = 10'000'000) {
  std::vector<Coloring> out;
  bool exceeded = false;
  for_each_proper(g, k, [&](std::span<const Color> colors) {
    if (out.size() == max_colorings) {
      exceeded = true;
      return false;
    }
    out.emplace_back(k, std::vector<Color>(colors.begin(), colors.end()));
    return true;
  });
  if (exceeded) {
    throw ResourceError("enumerate_proper: more than " +
                            std::to_string(max_colorings) + " colorings",
                        max_colorings);
  }
  return out;
}

/// Number of proper k-colorings; with `profile` (nu_1..nu_k) only those
/// with exactly that class-size profile.
inline std::uint64_t count_proper(
    const MultiGraph& g, std::size_t k,
    const std::optional<std::vector<std::size_t>>& profile = std::nullopt) {
  if (!profile) {
    return for_each_proper(g, k, [](std::span<const Color>) {});
  }
  if (profile->size() != k) {
    throw DomainError("count_proper: profile length must equal k");
  }
  std::uint64_t count = 0;
  std::vector<std::size_t> sizes(k + 1);
  for_each_proper(g, k, [&](std::span<const Color> colors) {
    std::fill(sizes.begin(), sizes.end(), 0);
    for (Color c : colors) ++sizes[c];
    if (std::equal(profile->begin(), profile->end(), sizes.begin() + 1)) {
      ++count;
    }
  });
  return count;
}

/// Class-balance statistics of a k-coloring.
///
/// Reports the raw deviations |nu_i - n/k| and the count exceeding
/// n/(k ln^4 k); `pass` is that count <= ln^8 k. The thresholds are
/// asymptotic in k, so the raw numbers are returned alongside. When a slack
/// is supplied, `within_slack` tests max_i |nu_i k/n - 1| <= slack.
struct BalanceReport {
  std::vector<double> deviations;
  double max_deviation = 0;
  double deviation_threshold = 0;
  std::size_t violations = 0;
  double allowed_violations = 0;
  bool pass = false;
  double max_ratio_deviation = 0;
  std::optional<bool> within_slack;
};

inline BalanceReport balance_check(std::span<const std::size_t> nu,
                                   std::size_t n, std::size_t k,
                                   std::optional<double> slack = std::nullopt) {
  if (k < 2) throw DomainError("balance_check: k must be >= 2");
  if (nu.size() != k) throw DomainError("balance_check: need k class sizes");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double lnk = std::log(kd);
  BalanceReport r;
  r.deviation_threshold = nd / (kd * std::pow(lnk, 4));
  r.allowed_violations = std::pow(lnk, 8);
  for (std::size_t size : nu) {
    const double dev = std::abs(static_cast<double>(size) - nd / kd);
    r.deviations.push_back(dev);
    r.max_deviation = std::max(r.max_deviation, dev);
    if (dev > r.deviation_threshold) ++r.violations;
    if (n > 0) {
      r.max_ratio_deviation = std::max(
          r.max_ratio_deviation,
          std::abs(static_cast<double>(size) * kd / nd - 1));
    }
  }
  r.pass = static_cast<double>(r.violations) <= r.allowed_violations;
  if (slack) r.within_slack = r.max_ratio_deviation <= *slack;
  return r;
}

inline BalanceReport balance_check(const Coloring& c, std::size_t n,
                                   std::size_t k,
                                   std::optional<double> slack = std::nullopt) {
  if (c.n() != n || c.k() != k) {
    throw DomainError("balance_check: coloring does not match n, k");
  }
  const auto nu = profile_of(c).nu;
  return balance_check(nu, n, k, slack);
}

/// G'(sigma): m independent ordered pairs, each uniform among the pairs
/// (u, v) with sigma(u) != sigma(v). This is G'(n, m) conditioned on sigma
/// being a proper coloring.
inline MultiGraph sample_planted(const Coloring& sigma, std::size_t m,
                                 std::uint64_t seed) {
  const std::size_t n = sigma.n();
  if (m > 0) {
    const auto sizes = sigma.class_sizes();
    bool two_classes = false;
    for (auto s : sizes) two_classes = two_classes || (s > 0 && s < n);
    if (!two_classes) {
      throw DomainError("sample_planted: coloring has a single class");
    }
  }
  Rng rng = make_rng(seed);
  std::vector<Edge> edges(m);
  for (Edge& e : edges) {
    do {
      e.u = static_cast<Vertex>(uniform_below(rng, n) + 1);
      e.v = static_cast<Vertex>(uniform_below(rng, n) + 1);
    } while (sigma[e.u] == sigma[e.v]);
  }
  return MultiGraph(n, std::move(edges));
}

/// Vertex i gets color 1 + (i - 1) mod k.
inline Coloring round_robin_coloring(std::size_t n, std::size_t k) {
  std::vector<Color> colors(n);
  for (std::size_t i = 0; i < n; ++i) colors[i] = static_cast<Color>(i % k + 1);
  return Coloring(k, std::move(colors));
}

// Text format: "n k" then the n colors, whitespace separated.

template <Color min_color>
void write_coloring(std::ostream& out, const BasicColoring<min_color>& c) {
  out << c.n() << ' ' << c.k() << '\n';
  for (std::size_t i = 0; i < c.n(); ++i) {
    if (i > 0) out << ' ';
    out << c.values()[i];
  }
  out << '\n';
}

template <typename ColoringType>
ColoringType read_coloring(std::istream& in) {
  long long n = -1;
  long long k = -1;
  if (!(in >> n >> k) || n < 0 || k < 0) {
    throw DomainError("coloring: expected header \"n k\"");
  }
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    long long c = 0;
    if (!(in >> c)) throw DomainError("coloring: expected n colors");
    if (c < 0 || c > k) throw DomainError("coloring: color outside 0..k");
    colors.push_back(static_cast<Color>(c));
  }
  std::string extra;
  if (in >> extra) throw DomainError("coloring: trailing data");
  return ColoringType(static_cast<std::size_t>(k), std::move(colors));
}

}  // namespace covercount
