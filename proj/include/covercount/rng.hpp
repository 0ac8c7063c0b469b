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

#include <cstdint>
#include <random>

namespace covercount {

/// Random engine used by every stochastic operation.
///
/// std::mt19937_64 is fully specified by the standard, so a given seed
/// produces the same stream on every conforming platform. The standard
/// distributions are not (their algorithms are implementation defined),
/// which is why draws go through uniform_below() instead.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the independent substream `stream` of `seed`.
///
/// Trials and tasks are numbered; each draws from derive_seed(seed, index),
/// so results do not depend on how tasks are scheduled across threads.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::uint64_t stream) noexcept {
  return mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng{derive_seed(seed, stream)};
}

/// Uniform integer in [0, bound). bound must be positive.
///
/// Lemire's multiply-and-reject; unbiased and platform independent.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  using u128 = unsigned __int128;
  std::uint64_t x = rng();
  u128 product = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      product = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates shuffle driven by uniform_below().
template <typename RandomIt>
void shuffle(RandomIt first, RandomIt last, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    const auto j = uniform_below(rng, i);
    std::swap(first[i - 1], first[j]);
  }
}

}  // namespace covercount
