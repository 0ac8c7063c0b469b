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

// Reference values marked "oracle" come from golden/moments_oracle.py.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "covercount/moments.hpp"
#include "covercount/rng.hpp"
#include "oracles.hpp"

namespace covercount {
namespace {

using LD = long double;

std::vector<double> random_simplex(Rng& rng, std::size_t k, double floor) {
  std::vector<double> a(k);
  double total = 0;
  for (auto& x : a) {
    x = floor + uniform_unit(rng);
    total += x;
  }
  for (auto& x : a) x /= total;
  return a;
}

TEST(Phi, Values) {
  EXPECT_EQ(phi(0.0), 0.0);
  EXPECT_NEAR(phi(std::numbers::e - 1), 1.0, 1e-15);
  EXPECT_NEAR(phi(1.0), 2 * std::log(2.0) - 1, 1e-15);
  EXPECT_NEAR(phi(1.0), 0.3862944, 1e-7);
  EXPECT_THROW(phi(-1.0), DomainError);
  EXPECT_THROW(phi(-2.0), DomainError);
}

TEST(Phi, SmallArgumentsAndConvexity) {
  // phi(x) = x^2/2 - x^3/6 + ... near 0.
  EXPECT_NEAR(phi(1e-6), 0.5e-12 - 1e-18 / 6, 1e-24);
  EXPECT_NEAR(phi(-1e-6), 0.5e-12 + 1e-18 / 6, 1e-24);
  EXPECT_NEAR(phi(0.0999999999), phi(0.1000000001), 1e-10);
  for (double x = -0.99; x < 5; x += 0.01) {
    const double h = 1e-3;
    EXPECT_GE(phi(x + h) + phi(x - h) - 2 * phi(x), -1e-15) << x;
    EXPECT_GE(phi(x), 0.0);
  }
}

TEST(Chernoff, Examples) {
  const auto b = chernoff_tails(1.0, std::numbers::e - 1);
  EXPECT_NEAR(b.upper, std::exp(-1.0), 1e-15);
  EXPECT_FALSE(b.lower.has_value());
  const auto tiny = chernoff_tails(3.0, 1e-9);
  EXPECT_NEAR(tiny.upper, 1.0, 1e-15);
  EXPECT_NEAR(*tiny.lower, 1.0, 1e-15);
  EXPECT_NEAR(*chernoff_tails(2.0, 2.0).lower, std::exp(-2.0), 1e-15);
  EXPECT_THROW(chernoff_tails(0.0, 1.0), DomainError);
  EXPECT_NEAR(chernoff_multiplicative(2.0, 3.0),
              std::exp(-6.0 * (std::log(3.0) - 1)), 1e-15);
  EXPECT_THROW(chernoff_multiplicative(2.0, 1.0), DomainError);
}

TEST(Chernoff, BoundsBinomialTails) {
  // Bin(20, 1/2), mean 10: Pr[X > 15] and Pr[X < 5].
  const auto b = chernoff_tails(10.0, 5.0);
  const double upper = testing::binomial_upper_tail(20, 0.5, 15);
  EXPECT_NEAR(upper, 6196.0 / 1048576.0, 1e-15);
  EXPECT_LE(upper, b.upper);
  EXPECT_LE(upper, *b.lower);  // symmetric law
  for (int n : {10, 40, 100}) {
    for (double p : {0.1, 0.3, 0.5}) {
      const double mu = n * p;
      for (double t = 0.5; t < 2 * mu; t += 0.5) {
        EXPECT_LE(testing::binomial_upper_tail(n, p, mu + t),
                  chernoff_tails(mu, t).upper + 1e-15);
      }
    }
  }
}

TEST(BallsBins, Examples) {
  EXPECT_NEAR(balls_bins_joint(2, {1, 1}), 0.5, 1e-15);
  EXPECT_NEAR(balls_bins_joint(3, {3}), 1.0, 1e-15);
  EXPECT_NEAR(balls_bins_joint(2, {2, 0}), 0.25, 1e-15);
  EXPECT_THROW(balls_bins_joint(2, {1, 0}), DomainError);
  EXPECT_NEAR(poisson_conditioned_joint(1.0, {1, 1}, 2), 0.5, 1e-15);
  EXPECT_NEAR(poisson_conditioned_joint(5.0, {1, 1}, 2), 0.5, 1e-15);
  EXPECT_NEAR(poisson_conditioned_joint(0.3, {4}, 4), 1.0, 1e-15);
  EXPECT_THROW(poisson_conditioned_joint(0.0, {1}, 1), DomainError);
  EXPECT_THROW(poisson_conditioned_joint(1.0, {1}, 2), DomainError);
}

// Calls f(t) for every occupancy vector of mu balls in nu bins.
template <typename F>
void for_each_occupancy(std::size_t mu, std::size_t nu, F&& f) {
  testing::for_each_map(nu, 0, static_cast<Color>(mu),
                        [&](const std::vector<Color>& x) {
                          std::size_t total = 0;
                          for (Color c : x) total += c;
                          if (total == mu) f(std::vector<std::size_t>(x.begin(), x.end()));
                        });
}

TEST(BallsBins, SumsToOneAndConstantBounded) {
  for (std::size_t mu = 1; mu <= 6; ++mu) {
    for (std::size_t nu = 1; nu <= 4; ++nu) {
      double total = 0;
      for_each_occupancy(mu, nu, [&](const std::vector<std::size_t>& t) {
        total += balls_bins_joint(mu, t);
        EXPECT_LE(poissonization_constant(mu, t), 3.0);
      });
      EXPECT_NEAR(total, 1.0, 1e-13);
    }
  }
}

TEST(ExpectedColorings, Examples) {
  EXPECT_NEAR(expected_colorings_exact(2, 1, {1, 1}), 1.0, 1e-15);
  EXPECT_NEAR(expected_colorings_exact(2, 0, {1, 1}), 2.0, 1e-15);
  EXPECT_NEAR(expected_colorings_exact(3, 2, {1, 1, 1}), 8.0 / 3, 1e-14);
  EXPECT_EQ(expected_colorings_exact(3, 1, {3, 0}), 0.0);
  EXPECT_THROW(expected_colorings_exact(3, 1, {1, 1}), DomainError);
}

TEST(ExpectedColorings, MatchesExhaustiveAverage) {
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t k : {2, 3}) {
      for (const auto& [nu, avg] : testing::brute_expected_colorings(3, m, k)) {
        const double exact = static_cast<double>(avg.numerator) /
                             static_cast<double>(avg.denominator);
        EXPECT_NEAR(expected_colorings_exact(3, m, nu), exact, 1e-12);
      }
    }
  }
}

TEST(ColoringRate, Examples) {
  EXPECT_NEAR(coloring_rate(2, 0.0, {0.5, 0.5}), std::log(2.0), 1e-15);
  const double third = 1.0 / 3;
  EXPECT_NEAR(coloring_rate(3, 5.0, {third, third, third}),
              std::log(3.0) + 2.5 * std::log(2.0 / 3), 1e-15);
  EXPECT_NEAR(coloring_rate(3, 5.0, {third, third, third}), 0.08495, 5e-6);
  EXPECT_NEAR(coloring_rate(3, 0.0, {0.5, 0.5, 0.0}), std::log(2.0), 1e-15);
  EXPECT_THROW(coloring_rate(2, 1.0, {0.5, 0.6}), DomainError);
  EXPECT_THROW(coloring_rate(3, 1.0, {0.5, 0.5}), DomainError);
}

TEST(ColoringRate, BalancedIsTheMaximum) {
  Rng rng = make_rng(3);
  for (std::size_t k : {2, 3, 5, 8}) {
    for (double d : {0.5, 3.0, 10.0}) {
      const std::vector<double> u(k, 1.0 / k);
      const double best = coloring_rate(k, d, u);
      EXPECT_NEAR(best, balanced_coloring_rate(k, d), 1e-13);
      for (int rep = 0; rep < 50; ++rep) {
        EXPECT_LE(coloring_rate(k, d, random_simplex(rng, k, 0.0)), best + 1e-13);
      }
    }
  }
}

TEST(BalancedColoringRate, Root) {
  EXPECT_NEAR(balanced_coloring_rate(3, 5.419037), 0.0, 1e-5);
  EXPECT_NEAR(balanced_coloring_rate(3, 0.0), std::log(3.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(coloring_threshold(3)), 5.41902258270291,
              1e-8);  // oracle
  EXPECT_NEAR(static_cast<double>(coloring_threshold(3)),
              -2 * std::log(3.0) / std::log(2.0 / 3), 1e-8);
  EXPECT_THROW(balanced_coloring_rate(1, 1.0), DomainError);
}

TEST(BalancedColoringRate, OffsetExpansion) {
  // At d = 2k ln k - ln k - c the balanced rate is c/(2k) + O(ln k / k^2).
  const std::size_t k = 1'000'000;
  const LD c = 2;
  const auto p = RateParams<LD>::from_c(k, c);
  const LD value = balanced_coloring_rate(k, p.d);
  const LD kk = static_cast<LD>(k);
  EXPECT_LE(std::abs(value - c / (2 * kk)), 10 * std::log(kk) / (kk * kk));
  EXPECT_EQ(RateParams<LD>::from_d(k, p.d).c, c);
}

TEST(GradHessian, BalancedPoint) {
  for (std::size_t k : {2, 3, 6}) {
    const std::vector<double> u(k, 1.0 / k);
    EXPECT_LT(grad_f(k, 4.0, u).cwiseAbs().maxCoeff(), 1e-14);
  }
  const auto h = hessian_f(2, 1.0, {0.5, 0.5});
  ASSERT_EQ(h.rows(), 1);
  EXPECT_NEAR(h(0, 0), -8.0, 1e-14);
  EXPECT_THROW(grad_f(3, 1.0, {0.5, 0.5, 0.0}), DomainError);
}

// coloring_rate with alpha_k = 1 - sum(beta).
LD reduced_rate(std::size_t k, LD d, const std::vector<LD>& beta) {
  std::vector<LD> alpha(beta);
  LD last = 1;
  for (LD b : beta) last -= b;
  alpha.push_back(last);
  return coloring_rate(k, d, alpha);
}

TEST(GradHessian, MatchFiniteDifferencesAndEigenvalueBound) {
  Rng rng = make_rng(7);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t k = 2 + rep % 5;
    const double d = 10 * uniform_unit(rng);
    const auto alpha = random_simplex(rng, k, 0.3);
    const auto g = grad_f(k, d, alpha);
    const auto h = hessian_f(k, d, alpha);
    std::vector<LD> beta(alpha.begin(), alpha.end() - 1);
    const LD step = 1e-5L;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      auto plus = beta;
      auto minus = beta;
      plus[i] += step;
      minus[i] -= step;
      const LD fd = (reduced_rate(k, d, plus) - reduced_rate(k, d, minus)) / (2 * step);
      EXPECT_NEAR(g(i), static_cast<double>(fd), 1e-6 * std::max(1.0, std::abs(g(i))));
      for (std::size_t j = 0; j + 1 < k; ++j) {
        auto pp = beta, pm = beta, mp = beta, mm = beta;
        pp[i] += step; pp[j] += step;
        pm[i] += step; pm[j] -= step;
        mp[i] -= step; mp[j] += step;
        mm[i] -= step; mm[j] -= step;
        const LD fd2 = (reduced_rate(k, d, pp) - reduced_rate(k, d, pm) -
                        reduced_rate(k, d, mp) + reduced_rate(k, d, mm)) /
                       (4 * step * step);
        EXPECT_NEAR(h(i, j), static_cast<double>(fd2),
                    1e-6 * h.cwiseAbs().maxCoeff());
      }
    }
    double squares = 0;
    for (double a : alpha) squares += a * a;
    const Eigen::SelfAdjointEigenSolver<Matrix<double>> eig(h);
    EXPECT_LT(eig.eigenvalues().maxCoeff(), -d / (1 - squares) + 1e-9);
    EXPECT_LT(eig.eigenvalues().maxCoeff(), -d);
  }
}

TEST(TaylorBound, Examples) {
  const double k3 = 3;
  const double d = 2 * k3 * std::log(k3) - std::log(k3);
  EXPECT_NEAR(taylor_bound(3, d, 0.0, {1 / k3, 1 / k3, 1 / k3}, 2.0),
              2.0 * std::log(k3) / 9, 1e-15);
  // |alpha - 1/3|^2 = (1/15)^2 + 2 (1/30)^2 = 1/150.
  EXPECT_NEAR(taylor_bound(3, d, 0.0, {0.4, 0.3, 0.3}, 0.0), -d / 300, 1e-10);
  EXPECT_THROW(taylor_bound(3, d + 0.1, 0.0, {0.4, 0.3, 0.3}, 0.0), DomainError);
}

TEST(TaylorBound, QuadraticDecayAwayFromBalance) {
  Rng rng = make_rng(11);
  for (std::size_t k : {3, 4, 10, 50}) {
    for (double c : {0.0, 2.0, 4.0}) {
      const auto p = RateParams<double>::from_c(k, c);
      const std::vector<double> u(k, 1.0 / k);
      const double center = coloring_rate(k, p.d, u);
      for (int rep = 0; rep < 100; ++rep) {
        const auto alpha = random_simplex(rng, k, rep % 2 ? 0.0 : 2.0);
        const double gap = center - taylor_bound(k, p.d, c, u, 0.0) +
                           taylor_bound(k, p.d, c, alpha, 0.0);
        EXPECT_LE(coloring_rate(k, p.d, alpha), gap + 1e-12);
      }
    }
  }
}

TEST(PoissonAtLeastTwo, SmallAndLarge) {
  for (double x : {1e-8, 1e-3, 0.1, 0.4999, 0.5, 0.5001, 2.0, 40.0}) {
    const long double exact = 1 - (1 + static_cast<LD>(x)) * std::exp(-static_cast<LD>(x));
    const double got = poisson_at_least_two(x);
    if (x >= 1e-3) {
      EXPECT_NEAR(got, static_cast<double>(exact), 1e-15 * std::max(1.0, got));
    }
    EXPECT_GE(got, 0.0);
    EXPECT_LT(got, 1.0);
  }
  EXPECT_NEAR(poisson_at_least_two(1e-8), 0.5e-16, 1e-23);
  EXPECT_EQ(poisson_at_least_two(0.0), 0.0);
  EXPECT_EQ(log_poisson_at_least_two(0.0), -std::numeric_limits<double>::infinity());
}

TEST(CoverTerms, Examples) {
  const double third = 1.0 / 3;
  const auto zero_d = cover_terms(3, 0.0, {0.0, third, third, third});
  EXPECT_NEAR(zero_d.F, third, 1e-15);
  EXPECT_NEAR(zero_d.p[0], 3.0, 1e-15);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(zero_d.p[i], 0.0);
  EXPECT_EQ(zero_d.rate, -std::numeric_limits<double>::infinity());

  const auto t = cover_terms(3, 10.0, {0.0, third, third, third});
  const double factor = 1 - 6 * std::exp(-5.0);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_NEAR(t.p[i], factor * factor, 1e-15);
    EXPECT_NEAR(t.p[i], 0.92078, 1e-5);
  }
  EXPECT_THROW(cover_terms(3, 1.0, {0.0, 1.0, 0.0, 0.0}), DomainError);
  EXPECT_THROW(cover_terms(3, 1.0, {0.5, 0.5}), DomainError);
}

TEST(CoverTerms, MatchOracle) {
  // oracle: k=3, d=6, alpha = (.1, .2, .3, .4)
  const auto t = cover_terms(3, 6.0, {0.1, 0.2, 0.3, 0.4});
  const std::vector<double> p{0.13316981826795529806, 0.61252558000688036327,
                              0.42858905564245471124, 0.36257979811402778611};
  for (int i = 0; i <= 3; ++i) EXPECT_NEAR(t.p[i], p[i], 1e-14);
  EXPECT_NEAR(t.rate, -0.70724392734559073422, 1e-14);
  EXPECT_NEAR(cover_rate(4, 9.0, {0.05, 0.3, 0.25, 0.2, 0.2}),
              -0.61675848089868346795, 1e-14);
}

TEST(CoverTerms, ProbabilitiesInRange) {
  Rng rng = make_rng(13);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t k = 2 + rep % 6;
    auto alpha = random_simplex(rng, k + 1, 0.1);
    const double d = 30 * uniform_unit(rng);
    const auto t = cover_terms(k, d, alpha);
    EXPECT_GT(t.F, 0.0);
    EXPECT_LT(t.F, 1.0);
    EXPECT_GE(t.p[0], 0.0);
    for (std::size_t i = 1; i <= k; ++i) {
      EXPECT_GE(t.p[i], 0.0);
      EXPECT_LT(t.p[i], 1.0);
    }
  }
}

TEST(CoverRate, AllJokers) {
  // F = 0 and p_0 = k(k-1)/2.
  EXPECT_NEAR(cover_rate(3, 7.0, {1.0, 0.0, 0.0, 0.0}), std::log(3.0), 1e-15);
  EXPECT_NEAR(cover_rate(5, 2.0, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0}), std::log(10.0), 1e-15);
}

TEST(CoverRate, NeverAboveColoringRate) {
  Rng rng = make_rng(17);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t k = 2 + rep % 6;
    const auto colored = random_simplex(rng, k, 0.2);
    std::vector<double> alpha{0.0};
    alpha.insert(alpha.end(), colored.begin(), colored.end());
    const double d = 20 * uniform_unit(rng);
    EXPECT_LE(cover_rate(k, d, alpha), coloring_rate(k, d, colored) + 1e-14);
  }
}

TEST(CoverRate, InvariantUnderColorPermutation) {
  Rng rng = make_rng(19);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t k = 3 + rep % 4;
    auto alpha = random_simplex(rng, k + 1, 0.1);
    const double d = 15 * uniform_unit(rng);
    const double base = cover_rate(k, d, alpha);
    std::vector<double> colored(alpha.begin() + 1, alpha.end());
    for (auto& x : colored) x /= 1 - alpha[0];
    const double col = coloring_rate(k, d, colored);
    shuffle(alpha.begin() + 1, alpha.end(), rng);
    EXPECT_NEAR(cover_rate(k, d, alpha), base, 1e-13);
    shuffle(colored.begin(), colored.end(), rng);
    EXPECT_NEAR(coloring_rate(k, d, colored), col, 1e-13);
  }
}

TEST(CoverRate, FiniteNEntropy) {
  const std::vector<double> alpha{0.2, 0.4, 0.4};
  const double exact = cover_rate(2, 3.0, alpha);
  double previous = -1e9;
  for (std::size_t n : {10, 100, 1000, 100000}) {
    const double finite = cover_rate(2, 3.0, alpha, n);
    EXPECT_LE(finite, exact);
    EXPECT_GT(finite, previous);
    previous = finite;
  }
  EXPECT_NEAR(previous, exact, 1e-3);
}

TEST(BalancedCoverRate, AgreesWithGeneralFormAndSlope) {
  Rng rng = make_rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t k = 3 + rep % 20;
    const LD d = 4 * k * std::log(static_cast<LD>(k)) * uniform_unit(rng) + 1;
    const LD a0 = 0.5 * uniform_unit(rng) + 1e-4;
    std::vector<LD> alpha(k + 1, (1 - a0) / k);
    alpha[0] = a0;
    const LD direct = cover_rate(k, d, alpha);
    EXPECT_NEAR(static_cast<double>(balanced_cover_rate(k, d, a0)),
                static_cast<double>(direct), 1e-12 * std::max<double>(1, std::abs(direct)));
    const LD h = 1e-6L * a0;
    const LD fd = (balanced_cover_rate(k, d, a0 + h) - balanced_cover_rate(k, d, a0 - h)) / (2 * h);
    const LD slope = balanced_cover_rate_slope(k, d, a0);
    EXPECT_NEAR(static_cast<double>(slope), static_cast<double>(fd),
                1e-6 * std::max<double>(1, std::abs(static_cast<double>(slope))));
  }
}

TEST(OptimalAlpha0, InteriorAtLargeK) {
  const std::size_t k = 10000;
  const LD kk = k;
  const LD d = RateParams<LD>::reference(k) - 1;
  const auto opt = optimal_alpha0(k, d);
  EXPECT_FALSE(opt.at_boundary);
  const LD target = (1 + 4 * std::log(kk)) / (2 * kk);
  EXPECT_NEAR(static_cast<double>(target), 1.893e-3, 1e-6);
  EXPECT_GT(opt.alpha0, 0.8L * target);
  EXPECT_LT(opt.alpha0, 1.2L * target);
  EXPECT_NEAR(static_cast<double>(opt.alpha0 / target), 1.07521070893, 1e-8);  // oracle
  const LD edge = std::pow(kk, -2.0L / 3);
  EXPECT_LT(balanced_cover_rate(k, d, opt.alpha0 / 2), opt.rate);
  EXPECT_LT(balanced_cover_rate(k, d, std::min(2 * opt.alpha0, edge)), opt.rate);
}

TEST(OptimalAlpha0, BoundaryAtSmallerK) {
  for (std::size_t k : {100, 1000}) {
    const auto opt = optimal_alpha0<LD>(k, d_cavity(k));
    EXPECT_TRUE(opt.at_boundary);
    EXPECT_EQ(opt.alpha0, std::pow(static_cast<LD>(k), -2.0L / 3));
  }
}

TEST(OptimalAlpha0, RatioTrendsToOne) {
  double previous = 1e9;
  for (std::size_t k : {100, 1000, 10000}) {
    const LD kk = k;
    const auto opt = optimal_alpha0<LD>(k, d_cavity(k));
    const double ratio = static_cast<double>(opt.alpha0 * 2 * kk / (1 + 4 * std::log(kk)));
    EXPECT_LT(std::abs(ratio - 1), previous);
    previous = std::abs(ratio - 1);
  }
}

TEST(CoverRate, NegativeAtFirstMomentBound) {
  // c = 0 with alpha_0 at its optimum; oracle value -1.31669409542e-5.
  const std::size_t k = 10000;
  const LD d = RateParams<LD>::reference(k);
  const auto opt = optimal_alpha0(k, d);
  EXPECT_LT(opt.rate, 0);
  EXPECT_NEAR(static_cast<double>(opt.rate), -1.31669409542e-5, 1e-15);
  std::vector<LD> alpha(k + 1, (1 - opt.alpha0) / k);
  alpha[0] = opt.alpha0;
  EXPECT_NEAR(static_cast<double>(cover_rate(k, d, alpha)),
              static_cast<double>(opt.rate), 1e-13);
}

TEST(CoverThreshold, MatchesOracle) {
  const auto t100 = cover_threshold(100);
  EXPECT_NEAR(static_cast<double>(t100.d), 908.8582874460107, 1e-6);
  EXPECT_GT(t100.peak_rate, 0);
  EXPECT_LT(t100.bracket_lo, t100.d);
  EXPECT_NEAR(static_cast<double>(cover_threshold(30).d), 176.9075415906422, 1e-6);
  const auto t1000 = cover_threshold(1000);
  EXPECT_NEAR(static_cast<double>(t1000.d), 13806.33153717306, 1e-6);
}

TEST(CoverThreshold, BelowFirstMomentBound) {
  for (std::size_t k : {50, 100, 300, 1000, 3000}) {
    EXPECT_LT(cover_threshold(k).d, d_first(k)) << k;
  }
}

TEST(CoverThreshold, NoCrossingAtSmallK) {
  for (std::size_t k : {3, 10}) {
    try {
      cover_threshold(k);
      FAIL() << "expected no crossing at k = " << k;
    } catch (const ThresholdSearchError& e) {
      EXPECT_LE(e.peak_rate(), 0) << k;
    }
  }
  EXPECT_THROW(cover_threshold(2), DomainError);
}

TEST(BoundsTable, SmallK) {
  const auto row = bounds_table(3);
  EXPECT_NEAR(row.d_first, 5 * std::log(3.0), 1e-14);
  EXPECT_NEAR(row.d_first, 5.49306, 1e-5);
  EXPECT_NEAR(row.d_an, 2.77259, 1e-5);
  EXPECT_NEAR(row.d_cavity, 4.49306, 1e-5);
  EXPECT_NEAR(row.d_second, 5 * std::log(3.0) - 2 * std::log(2.0), 1e-14);
  EXPECT_TRUE(row.d_second_omits_little_o);
  EXPECT_FALSE(row.d_cover.has_value());
  EXPECT_FALSE(row.d_cover_note.empty());
  EXPECT_THROW(bounds_table(2), DomainError);
}

TEST(BoundsTable, OrderingForLargeK) {
  for (std::size_t k : {100, 1000, 10000, 1000000}) {
    EXPECT_LT(d_an(k), d_second(k));
    EXPECT_LT(d_second(k), d_cavity(k));
    EXPECT_LT(d_cavity(k), d_first(k));
  }
}

}  // namespace
}  // namespace covercount
