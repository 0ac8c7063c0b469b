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
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "covercount/errors.hpp"
#include "covercount/rng.hpp"

namespace covercount {

/// Vertices are the integers 1..n.
using Vertex = std::uint32_t;

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// An ordered vertex pair, read as an undirected edge. u == v is a loop.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Simplicity { kAny, kAssertSimple };

/// Vertex count plus an ordered multiset of edges.
///
/// Immutable after construction. Neighbor lists carry multiplicity: two
/// parallel edges to u list u twice, and a loop at v lists v twice (it adds
/// 2 to deg(v)).
class MultiGraph {
 public:
  MultiGraph() = default;

  explicit MultiGraph(std::size_t n, std::vector<Edge> edges = {},
                      Simplicity simplicity = Simplicity::kAny)
      : n_(n), edges_(std::move(edges)) {
    if (n_ > std::numeric_limits<Vertex>::max() - 1) {
      throw DomainError("MultiGraph: vertex count too large");
    }
    for (const Edge& e : edges_) {
      if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) {
        throw DomainError("MultiGraph: edge endpoint outside 1.." +
                          std::to_string(n_));
      }
    }
    BuildAdjacency();
    if (simplicity == Simplicity::kAssertSimple) {
      if (!is_simple()) throw DomainError("MultiGraph: graph is not simple");
      simple_flag_ = true;
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v - 1],
            adjacency_.data() + offsets_[v]};
  }

  std::size_t degree(Vertex v) const {
    return offsets_[v] - offsets_[v - 1];
  }

  /// True if the graph was constructed with Simplicity::kAssertSimple.
  bool simple_flag() const noexcept { return simple_flag_; }

  /// No loops and no repeated undirected pair.
  bool is_simple() const {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_) {
      if (e.u == e.v) return false;
      pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
  }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void BuildAdjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u];
      ++offsets_[e.v];
    }
    for (std::size_t i = 1; i <= n_; ++i) offsets_[i] += offsets_[i - 1];
    adjacency_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
      adjacency_[fill[e.u - 1]++] = e.v;
      adjacency_[fill[e.v - 1]++] = e.u;
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  bool simple_flag_ = false;
};

/// m = ceil(d n / 2), the edge count for average degree d.
inline std::size_t edges_for_degree(double d, std::size_t n) {
  if (!(d >= 0) || !std::isfinite(d)) {
    throw DomainError("edges_for_degree: d must be finite and >= 0");
  }
  return static_cast<std::size_t>(std::ceil(d * static_cast<double>(n) / 2));
}

namespace detail {

// Index i in [0, n(n-1)/2) -> the i-th pair (u, v), u < v, 0-based, in
// colexicographic order.
inline std::pair<std::uint64_t, std::uint64_t> decode_pair(std::uint64_t i) {
  auto v = static_cast<std::uint64_t>(
      (1 + std::sqrt(1 + 8 * static_cast<long double>(i))) / 2);
  while (v * (v - 1) / 2 > i) --v;
  while ((v + 1) * v / 2 <= i) ++v;
  return {i - v * (v - 1) / 2, v};
}

}  // namespace detail

/// Uniformly random simple graph on 1..n with exactly m edges.
///
/// Samples an m-subset of the n(n-1)/2 pairs with Floyd's algorithm; edges
/// are returned sorted as (u, v) with u < v.
inline MultiGraph sample_gnm(std::size_t n, std::size_t m,
                             std::uint64_t seed) {
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  if (m > pairs) {
    throw DomainError("sample_gnm: m exceeds n(n-1)/2");
  }
  Rng rng = make_rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t index : chosen) {
    const auto [u, v] = detail::decode_pair(index);
    edges.push_back({static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1)});
  }
  std::sort(edges.begin(), edges.end());
  return MultiGraph(n, std::move(edges), Simplicity::kAssertSimple);
}

/// m ordered pairs drawn independently and uniformly from all n^2 pairs.
inline MultiGraph sample_gnm_multi(std::size_t n, std::size_t m,
                                   std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_gnm_multi: n must be >= 1");
  Rng rng = make_rng(seed);
  std::vector<Edge> edges(m);
  for (Edge& e : edges) {
    e.u = static_cast<Vertex>(uniform_below(rng, n) + 1);
    e.v = static_cast<Vertex>(uniform_below(rng, n) + 1);
  }
  return MultiGraph(n, std::move(edges));
}

/// Membership bitmap of a vertex list, index 0 unused.
inline std::vector<char> membership(const MultiGraph& g,
                                    std::span<const Vertex> set) {
  std::vector<char> in(g.n() + 1, 0);
  for (Vertex v : set) {
    if (!g.contains(v)) {
      throw DomainError("vertex " + std::to_string(v) + " outside 1.." +
                        std::to_string(g.n()));
    }
    in[v] = 1;
  }
  return in;
}

/// Edges with one endpoint in A and the other in B, with multiplicity.
///
/// An edge is counted once if either orientation fits, so for A == B this
/// is e(A), the number of edges inside A (loops included once).
inline std::size_t edge_count_between(const MultiGraph& g,
                                      std::span<const Vertex> a,
                                      std::span<const Vertex> b) {
  const auto in_a = membership(g, a);
  const auto in_b = membership(g, b);
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if ((in_a[e.u] && in_b[e.v]) || (in_b[e.u] && in_a[e.v])) ++count;
  }
  return count;
}

/// e(A): edges with both endpoints in A.
inline std::size_t edges_inside(const MultiGraph& g,
                                std::span<const Vertex> a) {
  return edge_count_between(g, a, a);
}

/// Sorts and removes duplicates.
inline VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return vertices;
}

inline VertexSet all_vertices(std::size_t n) {
  VertexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i + 1);
  return all;
}

// Edge-list text format: "n m" then one "u v" line per edge.

inline void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline MultiGraph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw DomainError("edge list: expected header \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw DomainError("edge list: expected " + std::to_string(m) +
                        " edges, got " + std::to_string(i));
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      throw DomainError("edge list: endpoint outside 1..n");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string extra;
  if (in >> extra) throw DomainError("edge list: trailing data");
  return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
}

// Small named graphs.

inline MultiGraph complete_multipartite(std::span<const std::size_t> parts) {
  std::vector<Vertex> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    part_of.insert(part_of.end(), parts[p], static_cast<Vertex>(p));
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < part_of.size(); ++u) {
    for (std::size_t v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) {
        edges.push_back({static_cast<Vertex>(u + 1),
                         static_cast<Vertex>(v + 1)});
      }
    }
  }
  return MultiGraph(part_of.size(), std::move(edges));
}

inline MultiGraph complete_graph(std::size_t n) {
  std::vector<std::size_t> parts(n, 1);
  return complete_multipartite(parts);
}

inline MultiGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1)});
  }
  return MultiGraph(n, std::move(edges));
}

inline MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<Vertex>(a.n());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return MultiGraph(a.n() + b.n(), std::move(edges));
}

}  // namespace covercount
