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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "covercount/coloring.hpp"
#include "covercount/graph.hpp"
#include "oracles.hpp"

namespace covercount {
namespace {

std::vector<std::vector<Color>> as_vectors(const std::vector<Coloring>& cs) {
  std::vector<std::vector<Color>> out;
  for (const auto& c : cs) out.emplace_back(c.values().begin(), c.values().end());
  return out;
}

TEST(IsProper, Examples) {
  const auto tri = testing::triangle();
  EXPECT_TRUE(is_proper(tri, Coloring(3, {1, 2, 3})));
  EXPECT_FALSE(is_proper(tri, Coloring(3, {1, 1, 2})));
  const MultiGraph loop(2, {{1, 1}});
  EXPECT_FALSE(is_proper(loop, Coloring(2, {1, 2})));
  EXPECT_FALSE(is_proper(loop, Coloring(2, {2, 1})));
}

TEST(IsProper, SizeMismatchThrows) {
  EXPECT_THROW(is_proper(testing::triangle(), Coloring(3, {1, 2})), DomainError);
}

TEST(Coloring, RejectsOutOfRangeColors) {
  EXPECT_THROW(Coloring(3, {0, 1}), DomainError);
  EXPECT_THROW(Coloring(3, {4}), DomainError);
  EXPECT_NO_THROW(PartialColoring(3, {0, 3}));
}

TEST(EnumerateProper, TriangleHasSix) {
  const auto all = enumerate_proper(testing::triangle(), 3);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_EQ(as_vectors(all), testing::brute_colorings(testing::triangle(), 3));
}

TEST(EnumerateProper, K222PartsAreMonochromatic) {
  const auto all = enumerate_proper(testing::k222(), 3);
  ASSERT_EQ(all.size(), 6u);
  for (const auto& c : all) {
    EXPECT_EQ(c[1], c[2]);
    EXPECT_EQ(c[3], c[4]);
    EXPECT_EQ(c[5], c[6]);
  }
  EXPECT_EQ(as_vectors(all), testing::brute_colorings(testing::k222(), 3));
}

TEST(EnumerateProper, EdgelessIsKToTheN) {
  EXPECT_EQ(enumerate_proper(MultiGraph(2), 2).size(), 4u);
  EXPECT_EQ(count_proper(MultiGraph(4), 3), 81u);
}

TEST(EnumerateProper, NotColorable) {
  EXPECT_TRUE(enumerate_proper(complete_graph(4), 3).empty());
  EXPECT_TRUE(enumerate_proper(MultiGraph(2, {{2, 2}}), 3).empty());
}

TEST(EnumerateProper, BudgetExceededThrows) {
  EXPECT_THROW(enumerate_proper(MultiGraph(5), 3, 100), ResourceError);
  EXPECT_NO_THROW(enumerate_proper(MultiGraph(5), 3, 243));
}

TEST(EnumerateProper, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::size_t k = 2 + seed % 3;
    const auto g = sample_gnm_multi(n, seed % 11, seed);
    const auto all = enumerate_proper(g, k);
    EXPECT_EQ(as_vectors(all), testing::brute_colorings(g, k)) << seed;
    for (const auto& c : all) EXPECT_TRUE(is_proper(g, c));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  }
}

TEST(CountProper, Examples) {
  const auto tri = testing::triangle();
  EXPECT_EQ(count_proper(tri, 3), 6u);
  EXPECT_EQ(count_proper(tri, 3, std::vector<std::size_t>{1, 1, 1}), 6u);
  EXPECT_EQ(count_proper(tri, 3, std::vector<std::size_t>{2, 1, 0}), 0u);
  EXPECT_EQ(count_proper(MultiGraph(2, {{1, 2}}), 3), 6u);
  EXPECT_THROW(count_proper(tri, 3, std::vector<std::size_t>{3}), DomainError);
}

TEST(CountProper, ProfilesPartitionTheCount) {
  const auto g = path_graph(5);
  std::uint64_t total = 0;
  testing::for_each_map(3, 0, 5, [&](const std::vector<Color>& x) {
    if (std::accumulate(x.begin(), x.end(), 0u) != 5) return;
    total += count_proper(g, 3, std::vector<std::size_t>(x.begin(), x.end()));
  });
  EXPECT_EQ(total, count_proper(g, 3));
}

TEST(CountProper, MonotoneUnderEdgeAddition) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = sample_gnm_multi(7, 10, seed);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::uint64_t previous = count_proper(MultiGraph(7), 3);
    for (std::size_t i = 1; i <= edges.size(); ++i) {
      const MultiGraph prefix(7, {edges.begin(), edges.begin() + i});
      const auto now = count_proper(prefix, 3);
      EXPECT_LE(now, previous);
      previous = now;
    }
  }
}

TEST(CountProper, ColorPermutationsPreserveTheSet) {
  const std::vector<std::vector<Color>> perms = {
      {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = sample_gnm(7, 9, seed);
    const auto all = enumerate_proper(g, 3);
    const std::set<Coloring> set(all.begin(), all.end());
    for (const auto& p : perms) {
      for (const auto& c : all) {
        std::vector<Color> mapped;
        for (Color x : c.values()) mapped.push_back(p[x - 1]);
        EXPECT_TRUE(set.count(Coloring(3, mapped)));
      }
    }
    if (!all.empty()) {
      // A triangle forces distinct colors, so k! divides the count.
      const auto with_clique = disjoint_union(g, testing::triangle());
      EXPECT_EQ(count_proper(with_clique, 3) % 6, 0u);
    }
  }
}

TEST(BalanceCheck, Balanced) {
  const std::vector<std::size_t> nu{100, 100, 100};
  const auto r = balance_check(nu, 300, 3);
  EXPECT_EQ(r.max_deviation, 0);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_TRUE(r.pass);
}

TEST(BalanceCheck, OneLargeClass) {
  const std::vector<std::size_t> nu{200, 50, 50};
  const auto r = balance_check(nu, 300, 3);
  EXPECT_EQ(r.deviations, (std::vector<double>{100, 50, 50}));
  const double ln3 = std::log(3.0);
  EXPECT_NEAR(r.deviation_threshold, 100 / std::pow(ln3, 4), 1e-9);
  EXPECT_NEAR(r.deviation_threshold, 68.647, 1e-3);
  EXPECT_NEAR(r.allowed_violations, 2.12205, 1e-5);
  EXPECT_EQ(r.violations, 1u);
  EXPECT_TRUE(r.pass);
}

TEST(BalanceCheck, SingleClassFailsCountTest) {
  // Deviations (200, 100, 100) all exceed 68.65, and 3 > ln^8 3.
  const std::vector<std::size_t> nu{300, 0, 0};
  const auto r = balance_check(nu, 300, 3);
  EXPECT_EQ(r.max_deviation, 200);
  EXPECT_EQ(r.violations, 3u);
  EXPECT_FALSE(r.pass);
}

TEST(BalanceCheck, SlackAndErrors) {
  const std::vector<std::size_t> nu{40, 30, 20};
  const auto r = balance_check(nu, 90, 3, 0.5);
  EXPECT_NEAR(r.max_ratio_deviation, 1.0 / 3, 1e-12);
  ASSERT_TRUE(r.within_slack.has_value());
  EXPECT_TRUE(*r.within_slack);
  EXPECT_FALSE(*balance_check(nu, 90, 3, 0.2).within_slack);
  const std::vector<std::size_t> one{5};
  EXPECT_THROW(balance_check(one, 5, 1), DomainError);
  EXPECT_EQ(balance_check(round_robin_coloring(9, 3), 9, 3).violations, 0u);
}

TEST(SamplePlanted, ColoringIsAlwaysProper) {
  const auto sigma = round_robin_coloring(12, 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = sample_planted(sigma, 20, seed);
    EXPECT_EQ(g.m(), 20u);
    EXPECT_TRUE(is_proper(g, sigma));
  }
  EXPECT_THROW(sample_planted(Coloring(2, {1, 1}), 1, 0), DomainError);
}

TEST(ColoringFormat, RoundTrip) {
  const Coloring c(3, {1, 3, 2, 2});
  std::ostringstream out;
  write_coloring(out, c);
  EXPECT_EQ(out.str(), "4 3\n1 3 2 2\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_coloring<Coloring>(in), c);

  const PartialColoring z(2, {0, 2, 0});
  std::ostringstream zout;
  write_coloring(zout, z);
  std::istringstream zin(zout.str());
  EXPECT_EQ(read_coloring<PartialColoring>(zin), z);
}

TEST(ColoringFormat, RejectsMalformed) {
  for (const char* text : {"", "2 3\n1\n", "2 3\n1 4\n", "1 3\n0\n", "1 3\n1 1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_coloring<Coloring>(in), DomainError) << text;
  }
}

}  // namespace
}  // namespace covercount
