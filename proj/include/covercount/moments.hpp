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
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "covercount/errors.hpp"

// Closed-form first-moment computations. Everything is templated on the
// floating type; the threshold searches run in long double because the
// rates they drive to zero are differences of O(ln k) terms.

namespace covercount {

namespace detail {

template <typename Real>
Real real_of(std::size_t x) {
  return static_cast<Real>(static_cast<long double>(x));
}

template <typename Real>
Real log_factorial(Real x) {
  using std::lgamma;
  return lgamma(x + 1);
}

// x ln x with the 0 ln 0 = 0 convention.
template <typename Real>
Real xlogx(Real x) {
  using std::log;
  return x > 0 ? x * log(x) : Real(0);
}

template <typename Real>
void require_simplex(const std::vector<Real>& alpha, const char* who) {
  Real total = 0;
  for (const Real& a : alpha) {
    if (a < 0) throw DomainError(std::string(who) + ": negative entry");
    total += a;
  }
  using std::abs;
  if (abs(total - 1) > Real(1e-9)) {
    throw DomainError(std::string(who) + ": entries must sum to 1");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Chernoff bounds

/// phi(x) = (1 + x) ln(1 + x) - x for x > -1.
template <typename Real>
Real phi(Real x) {
  using std::abs;
  using std::log1p;
  if (!(x > -1)) throw DomainError("phi: x must be > -1");
  if (abs(x) < Real(0.1)) {
    // sum_{n>=2} (-1)^n x^n / (n (n - 1)); avoids the cancellation near 0.
    Real term = x * x;
    Real sum = 0;
    for (int n = 2; n < 200; ++n) {
      const Real add = term / Real(n * (n - 1));
      sum += (n % 2 == 0) ? add : -add;
      if (abs(add) <= abs(sum) * std::numeric_limits<Real>::epsilon()) break;
      term *= x;
    }
    return sum;
  }
  return (1 + x) * log1p(x) - x;
}

template <typename Real>
struct ChernoffBounds {
  Real upper;                 // Pr[X > mu + t]
  std::optional<Real> lower;  // Pr[X < mu - t], defined for t <= mu
};

/// exp(-mu phi(t/mu)) and exp(-mu phi(-t/mu)) for a binomial with mean mu.
template <typename Real>
ChernoffBounds<Real> chernoff_tails(Real mu, Real t) {
  using std::exp;
  if (!(mu > 0) || !(t > 0)) {
    throw DomainError("chernoff_tails: need mu > 0 and t > 0");
  }
  ChernoffBounds<Real> b{exp(-mu * phi(t / mu)), std::nullopt};
  if (t < mu) {
    b.lower = exp(-mu * phi(-t / mu));
  } else if (t == mu) {
    b.lower = exp(-mu);  // phi(-1) = 1 in the limit
  }
  return b;
}

/// Pr[X > t mu] <= exp(-t mu ln(t / e)) for t > 1.
template <typename Real>
Real chernoff_multiplicative(Real mu, Real t) {
  using std::exp;
  using std::log;
  if (!(mu > 0) || !(t > 1)) {
    throw DomainError("chernoff_multiplicative: need mu > 0 and t > 1");
  }
  return exp(-t * mu * (log(t) - 1));
}

// ---------------------------------------------------------------------------
// Balls and bins

/// Probability that mu balls thrown uniformly into nu = t.size() bins land
/// with occupancies t: mu! / prod(t_i!) * nu^{-mu}.
template <typename Real = double>
Real balls_bins_joint(std::size_t mu, const std::vector<std::size_t>& t) {
  using std::exp;
  using std::log;
  if (t.empty()) throw DomainError("balls_bins_joint: need at least one bin");
  if (std::accumulate(t.begin(), t.end(), std::size_t{0}) != mu) {
    throw DomainError("balls_bins_joint: occupancies must sum to mu");
  }
  const Real nu = detail::real_of<Real>(t.size());
  Real log_p = detail::log_factorial(detail::real_of<Real>(mu)) -
               detail::real_of<Real>(mu) * log(nu);
  for (std::size_t ti : t) log_p -= detail::log_factorial(detail::real_of<Real>(ti));
  return exp(log_p);
}

/// log Pr[Po(lambda) = t].
template <typename Real>
Real log_poisson_pmf(Real lambda, std::size_t t) {
  using std::log;
  const Real tr = detail::real_of<Real>(t);
  return (t == 0 ? Real(0) : tr * log(lambda)) - lambda -
         detail::log_factorial(tr);
}

/// Pr[b = t | sum b = mu] for independent b_i ~ Po(lambda):
/// prod Pr[Po(lambda) = t_i] / Pr[Po(nu lambda) = mu].
template <typename Real>
Real poisson_conditioned_joint(Real lambda, const std::vector<std::size_t>& t,
                               std::size_t mu) {
  using std::exp;
  if (!(lambda > 0)) {
    throw DomainError("poisson_conditioned_joint: lambda must be > 0");
  }
  if (t.empty()) throw DomainError("poisson_conditioned_joint: no bins");
  if (std::accumulate(t.begin(), t.end(), std::size_t{0}) != mu) {
    throw DomainError("poisson_conditioned_joint: occupancies must sum to mu");
  }
  Real log_p = 0;
  for (std::size_t ti : t) log_p += log_poisson_pmf(lambda, ti);
  log_p -= log_poisson_pmf(detail::real_of<Real>(t.size()) * lambda, mu);
  return exp(log_p);
}

/// balls_bins_joint / (sqrt(mu) prod Pr[Po(mu/nu) = t_i]): the constant
/// hidden in the O(sqrt(mu)) Poissonization bound, for one occupancy vector.
template <typename Real = double>
Real poissonization_constant(std::size_t mu, const std::vector<std::size_t>& t) {
  using std::exp;
  using std::sqrt;
  if (mu == 0) throw DomainError("poissonization_constant: mu must be > 0");
  const Real lambda = detail::real_of<Real>(mu) / detail::real_of<Real>(t.size());
  Real log_indep = 0;
  for (std::size_t ti : t) log_indep += log_poisson_pmf(lambda, ti);
  return balls_bins_joint<Real>(mu, t) /
         (sqrt(detail::real_of<Real>(mu)) * exp(log_indep));
}

// ---------------------------------------------------------------------------
// First moment over colorings

/// E[Z_nu] in G'(n, m): the number of maps with class sizes nu times the
/// probability (1 - sum (nu_i/n)^2)^m that all m independent edges are
/// bichromatic. Exact at finite n.
template <typename Real = double>
Real expected_colorings_exact(std::size_t n, std::size_t m,
                              const std::vector<std::size_t>& nu) {
  using std::exp;
  using std::log1p;
  if (std::accumulate(nu.begin(), nu.end(), std::size_t{0}) != n) {
    throw DomainError("expected_colorings_exact: profile must sum to n");
  }
  if (n == 0) return Real(1);
  const Real nr = detail::real_of<Real>(n);
  Real log_count = detail::log_factorial(nr);
  Real squares = 0;
  for (std::size_t x : nu) {
    const Real xr = detail::real_of<Real>(x);
    log_count -= detail::log_factorial(xr);
    squares += (xr / nr) * (xr / nr);
  }
  if (m == 0) return exp(log_count);
  if (squares >= 1) return Real(0);
  return exp(log_count + detail::real_of<Real>(m) * log1p(-squares));
}

/// Parameterization d = 2k ln k - ln k - c of the average degree.
template <typename Real = double>
struct RateParams {
  std::size_t k = 0;
  Real d = 0;
  Real c = 0;

  static Real reference(std::size_t k) {
    using std::log;
    const Real kr = detail::real_of<Real>(k);
    return 2 * kr * log(kr) - log(kr);
  }
  static RateParams from_d(std::size_t k, Real d) {
    return {k, d, reference(k) - d};
  }
  static RateParams from_c(std::size_t k, Real c) {
    return {k, reference(k) - c, c};
  }
};

/// Shannon entropy -sum alpha_i ln alpha_i.
template <typename Real>
Real entropy(const std::vector<Real>& alpha) {
  Real h = 0;
  for (const Real& a : alpha) h -= detail::xlogx(a);
  return h;
}

/// -sum alpha_i ln alpha_i + (d/2) ln(1 - sum alpha_i^2) over k classes.
template <typename Real>
Real coloring_rate(std::size_t k, Real d, const std::vector<Real>& alpha) {
  using std::log1p;
  if (alpha.size() != k) throw DomainError("coloring_rate: need k entries");
  detail::require_simplex(alpha, "coloring_rate");
  Real squares = 0;
  for (const Real& a : alpha) squares += a * a;
  if (!(squares < 1)) throw DomainError("coloring_rate: sum of squares >= 1");
  return entropy(alpha) + d / 2 * log1p(-squares);
}

/// ln k + (d/2) ln(1 - 1/k): the coloring rate at the balanced profile.
template <typename Real>
Real balanced_coloring_rate(std::size_t k, Real d) {
  using std::log;
  using std::log1p;
  if (k < 2) throw DomainError("balanced_coloring_rate: k must be >= 2");
  const Real kr = detail::real_of<Real>(k);
  return log(kr) + d / 2 * log1p(-1 / kr);
}

/// Same rate with d = 2k ln k - ln k - c, evaluated from c. Near the root
/// the two terms of the d form cancel to O(1/k^2); here
///   ln k + (2k - 1)/2 ln(1 - 1/k) = -sum_{i>=2} (i - 1) / (2 i (i + 1) k^i)
/// is summed directly, so the result keeps its relative accuracy.
template <typename Real>
Real balanced_coloring_rate(const RateParams<Real>& p) {
  using std::abs;
  using std::log;
  using std::log1p;
  if (p.k < 2) throw DomainError("balanced_coloring_rate: k must be >= 2");
  const Real kr = detail::real_of<Real>(p.k);
  Real power = 1 / (kr * kr);
  Real series = 0;
  for (int i = 2; i < 400; ++i) {
    const Real add = Real(i - 1) / Real(2 * i * (i + 1)) * power;
    series -= add;
    if (add <= abs(series) * std::numeric_limits<Real>::epsilon()) break;
    power /= kr;
  }
  return log(kr) * series - p.c / 2 * log1p(-1 / kr);
}

namespace detail {

template <typename Real>
void require_interior(const std::vector<Real>& alpha, std::size_t k,
                      const char* who) {
  if (k < 2 || alpha.size() != k) {
    throw DomainError(std::string(who) + ": need k >= 2 entries");
  }
  require_simplex(alpha, who);
  for (const Real& a : alpha) {
    if (!(a > 0)) throw DomainError(std::string(who) + ": boundary point");
  }
}

}  // namespace detail

template <typename Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

/// Gradient of coloring_rate in the coordinates alpha_1..alpha_{k-1}, with
/// alpha_k = 1 - sum of the others:
///   ln(alpha_k/alpha_i) + d (alpha_k - alpha_i) / (1 - |alpha|^2).
/// `alpha` is the full k-vector.
template <typename Real>
Vector<Real> grad_f(std::size_t k, Real d, const std::vector<Real>& alpha) {
  using std::log;
  detail::require_interior(alpha, k, "grad_f");
  Real squares = 0;
  for (const Real& a : alpha) squares += a * a;
  const Real last = alpha[k - 1];
  Vector<Real> g(static_cast<Eigen::Index>(k - 1));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    g(static_cast<Eigen::Index>(i)) =
        log(last / alpha[i]) + d * (last - alpha[i]) / (1 - squares);
  }
  return g;
}

/// Hessian of coloring_rate in the same coordinates:
///   diagonal  -1/alpha_k - 1/alpha_i - 2d/(1-S) - 2d (alpha_k-alpha_i)^2/(1-S)^2
///   off-diag  -1/alpha_k - d/(1-S) - 2d (alpha_k-alpha_i)(alpha_k-alpha_j)/(1-S)^2
/// with S = |alpha|^2. Negative definite with eigenvalues below -d/(1-S).
template <typename Real>
Matrix<Real> hessian_f(std::size_t k, Real d, const std::vector<Real>& alpha) {
  detail::require_interior(alpha, k, "hessian_f");
  Real squares = 0;
  for (const Real& a : alpha) squares += a * a;
  const Real last = alpha[k - 1];
  const Real denom = 1 - squares;
  const auto dim = static_cast<Eigen::Index>(k - 1);
  Matrix<Real> h(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Real di = last - alpha[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Real dj = last - alpha[static_cast<std::size_t>(j)];
      if (i == j) {
        h(i, j) = -1 / last - 1 / alpha[static_cast<std::size_t>(i)] -
                  2 * d / denom - 2 * d * di * di / (denom * denom);
      } else {
        h(i, j) = -1 / last - d / denom - 2 * d * di * dj / (denom * denom);
      }
    }
  }
  return h;
}

/// c/(2k) + C ln k / k^2 - (d/2) |alpha - 1/k|^2, the quadratic upper bound
/// on the per-profile coloring rate. C is the constant of the O(ln k / k^2)
/// term. (k, d, c) must satisfy d = 2k ln k - ln k - c.
template <typename Real>
Real taylor_bound(std::size_t k, Real d, Real c, const std::vector<Real>& alpha,
                  Real big_o_constant) {
  using std::abs;
  using std::log;
  using std::max;
  if (k < 2 || alpha.size() != k) throw DomainError("taylor_bound: bad k");
  const Real expected_d = RateParams<Real>::reference(k) - c;
  if (abs(d - expected_d) > Real(1e-9) * max(Real(1), abs(d))) {
    throw DomainError("taylor_bound: d != 2k ln k - ln k - c");
  }
  const Real kr = detail::real_of<Real>(k);
  Real distance = 0;
  for (const Real& a : alpha) distance += (a - 1 / kr) * (a - 1 / kr);
  return c / (2 * kr) + big_o_constant * log(kr) / (kr * kr) -
         d / 2 * distance;
}

// ---------------------------------------------------------------------------
// First moment over covers

/// Pr[Po(x) >= 2] = 1 - (1 + x) e^{-x}, without cancellation for small x.
template <typename Real>
Real poisson_at_least_two(Real x) {
  using std::abs;
  using std::exp;
  using std::expm1;
  if (x < 0) throw DomainError("poisson_at_least_two: x must be >= 0");
  if (x < Real(0.5)) {
    // sum_{n>=2} (-1)^n (n - 1) x^n / n!
    Real term = x * x / 2;  // x^n / n!
    Real sum = 0;
    for (int n = 2; n < 200; ++n) {
      const Real add = Real(n - 1) * term;
      sum += (n % 2 == 0) ? add : -add;
      if (add <= abs(sum) * std::numeric_limits<Real>::epsilon()) break;
      term *= x / Real(n + 1);
    }
    return sum;
  }
  return -expm1(-x) - x * exp(-x);
}

/// ln Pr[Po(x) >= 2]; -infinity at x = 0.
template <typename Real>
Real log_poisson_at_least_two(Real x) {
  using std::exp;
  using std::log;
  using std::log1p;
  if (x == 0) return -std::numeric_limits<Real>::infinity();
  if (x < Real(0.5)) return log(poisson_at_least_two(x));
  return log1p(-(1 + x) * exp(-x));
}

/// Rate terms of a cover profile alpha = (alpha_0, ..., alpha_k), where
/// alpha_0 is the joker class. With F = sum_{j>=1} alpha_j^2 and
/// x_j = alpha_j d / (1 - F):
///   p_i = prod_{j != i} (1 - (1 + x_j) e^{-x_j})                  i >= 1
///   p_0 = sum_{i != j} (1/2 + x_j) e^{-(x_i + x_j)}
/// `log_p` holds ln p_i (possibly -infinity).
template <typename Real>
struct CoverRateTerms {
  std::vector<Real> alpha;
  Real F = 0;
  std::vector<Real> p;
  std::vector<Real> log_p;
  Real entropy = 0;
  Real rate = 0;
};

template <typename Real>
CoverRateTerms<Real> cover_terms(std::size_t k, Real d,
                                 const std::vector<Real>& alpha) {
  using std::exp;
  using std::log;
  using std::log1p;
  if (k < 2 || alpha.size() != k + 1) {
    throw DomainError("cover_terms: need k >= 2 and k + 1 entries");
  }
  if (d < 0) throw DomainError("cover_terms: d must be >= 0");
  detail::require_simplex(alpha, "cover_terms");
  CoverRateTerms<Real> t;
  t.alpha = alpha;
  for (std::size_t j = 1; j <= k; ++j) t.F += alpha[j] * alpha[j];
  if (!(t.F < 1)) throw DomainError("cover_terms: F >= 1");

  std::vector<Real> x(k + 1, 0);
  std::vector<Real> log_factor(k + 1, 0);
  Real log_sum = 0;  // sum of finite ln(1 - (1 + x_j) e^{-x_j})
  std::size_t zero_factors = 0;
  Real exp_sum = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    x[j] = alpha[j] * d / (1 - t.F);
    exp_sum += exp(-x[j]);
    if (x[j] > 0) {
      log_factor[j] = log_poisson_at_least_two(x[j]);
      log_sum += log_factor[j];
    } else {
      ++zero_factors;
    }
  }

  const Real neg_inf = -std::numeric_limits<Real>::infinity();
  t.p.assign(k + 1, 0);
  t.log_p.assign(k + 1, neg_inf);
  Real p0 = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    const Real ej = exp(-x[j]);
    p0 += (Real(0.5) + x[j]) * ej * (exp_sum - ej);
  }
  t.p[0] = p0;
  t.log_p[0] = p0 > 0 ? log(p0) : neg_inf;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t zeros_without_i = zero_factors - (x[i] > 0 ? 0 : 1);
    if (zeros_without_i > 0) continue;
    t.log_p[i] = log_sum - (x[i] > 0 ? log_factor[i] : Real(0));
    t.p[i] = exp(t.log_p[i]);
  }

  t.entropy = entropy(alpha);
  Real penalty = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    if (alpha[i] == 0) continue;
    if (t.log_p[i] == neg_inf) {
      t.rate = neg_inf;
      return t;
    }
    penalty += alpha[i] * t.log_p[i];
  }
  t.rate = t.entropy + d / 2 * log1p(-t.F) + penalty;
  return t;
}

/// Upper-bound rate (1/n) ln E[#covers with profile alpha]: entropy over the
/// k + 1 classes + (d/2) ln(1 - F) + sum_i alpha_i ln p_i. With n given, the
/// entropy is the finite-n (1/n) ln multinomial(n; alpha n) instead.
/// Returns -infinity when some p_i = 0 with alpha_i > 0.
template <typename Real>
Real cover_rate(std::size_t k, Real d, const std::vector<Real>& alpha,
                std::optional<std::size_t> n_for_entropy = std::nullopt) {
  using std::log1p;
  auto t = cover_terms(k, d, alpha);
  if (!n_for_entropy || t.rate == -std::numeric_limits<Real>::infinity()) {
    return t.rate;
  }
  const Real n = detail::real_of<Real>(*n_for_entropy);
  if (!(n > 0)) throw DomainError("cover_rate: n must be positive");
  Real log_count = detail::log_factorial(n);
  for (const Real& a : alpha) log_count -= detail::log_factorial(a * n);
  return t.rate - t.entropy + log_count / n;
}

/// cover_rate at alpha = (alpha0, (1-alpha0)/k, ..., (1-alpha0)/k),
/// evaluated in O(1).
template <typename Real>
Real balanced_cover_rate(std::size_t k, Real d, Real alpha0) {
  using std::exp;
  using std::log;
  using std::log1p;
  if (k < 2) throw DomainError("balanced_cover_rate: k must be >= 2");
  if (!(alpha0 >= 0) || !(alpha0 <= 1)) {
    throw DomainError("balanced_cover_rate: alpha0 outside [0, 1]");
  }
  const Real kr = detail::real_of<Real>(k);
  const Real a = (1 - alpha0) / kr;
  const Real F = kr * a * a;
  const Real x = a * d / (1 - F);
  const Real neg_inf = -std::numeric_limits<Real>::infinity();
  Real rate = -detail::xlogx(alpha0) - kr * detail::xlogx(a) +
              d / 2 * log1p(-F);
  if (alpha0 > 0) {
    const Real log_p0 = log(kr * (kr - 1)) + log(Real(0.5) + x) - 2 * x;
    rate += alpha0 * log_p0;
  }
  if (a > 0) {
    const Real log_pi = (kr - 1) * log_poisson_at_least_two(x);
    if (log_pi == neg_inf) return neg_inf;
    rate += (1 - alpha0) * log_pi;
  }
  return rate;
}

/// balanced_cover_rate with d = 2k ln k - ln k - c, evaluated from c.
///
/// In the d form, (1 - alpha0) ln k and (d/2) ln(1 - F) are both about
/// ln k and cancel. Writing ln(1 - F) = -F (1 + s) with s = sum_{j>=2}
/// F^{j-1}/j, their sum is
///   (1 - alpha0) ln k (alpha0 - r + alpha0 r) - (c/2) ln(1 - F),
/// r = s - (1 + s)/(2k), where every piece is small or exact.
template <typename Real>
Real balanced_cover_rate(const RateParams<Real>& p, Real alpha0) {
  using std::abs;
  using std::log;
  using std::log1p;
  const std::size_t k = p.k;
  if (k < 2) throw DomainError("balanced_cover_rate: k must be >= 2");
  if (!(alpha0 >= 0) || !(alpha0 < 1)) {
    throw DomainError("balanced_cover_rate: alpha0 outside [0, 1)");
  }
  const Real kr = detail::real_of<Real>(k);
  const Real lnk = log(kr);
  const Real b = 1 - alpha0;
  const Real a = b / kr;
  const Real F = b * a;
  Real s = 0;
  Real power = F;
  for (int j = 2; j < 400; ++j) {
    const Real add = power / Real(j);
    s += add;
    if (add <= abs(s) * std::numeric_limits<Real>::epsilon()) break;
    power *= F;
  }
  const Real r = s - (1 + s) / (2 * kr);
  const Real d = (2 * kr - 1) * lnk - p.c;
  const Real x = a * d / (1 - F);
  Real rate = -detail::xlogx(alpha0) - b * log1p(-alpha0) +
              b * lnk * (alpha0 - r + alpha0 * r) - p.c / 2 * log1p(-F);
  if (alpha0 > 0) {
    const Real log_p0 = log(kr * (kr - 1)) + log(Real(0.5) + x) - 2 * x;
    rate += alpha0 * log_p0;
  }
  const Real log_pi = (kr - 1) * log_poisson_at_least_two(x);
  if (log_pi == -std::numeric_limits<Real>::infinity()) return log_pi;
  return rate + b * log_pi;
}

/// d/d alpha0 of balanced_cover_rate for alpha0 in (0, 1).
template <typename Real>
Real balanced_cover_rate_slope(std::size_t k, Real d, Real alpha0) {
  using std::exp;
  using std::log;
  const Real kr = detail::real_of<Real>(k);
  const Real a = (1 - alpha0) / kr;
  const Real F = kr * a * a;
  const Real rest = 1 - F;
  const Real x = a * d / rest;
  const Real dx = d * (-rest / kr - 2 * a * a) / (rest * rest);
  const Real h = log_poisson_at_least_two(x);
  const Real dh = x * exp(-x) / poisson_at_least_two(x);
  const Real log_p0 = log(kr * (kr - 1)) + log(Real(0.5) + x) - 2 * x;
  return log(a / alpha0) + x + log_p0 +
         alpha0 * (1 / (Real(0.5) + x) - 2) * dx - (kr - 1) * h +
         kr * (kr - 1) * a * dh * dx;
}

template <typename Real>
struct Alpha0Optimum {
  Real alpha0 = 0;
  Real rate = 0;
  bool at_boundary = false;  // maximum sits at alpha0 = k^{-2/3}
};

/// Maximizes balanced_cover_rate over alpha0 in (0, k^{-2/3}].
///
/// The slope tends to +infinity as alpha0 -> 0 (through -ln alpha0), so the
/// interior maximum is the root of the slope; it is bracketed and bisected
/// geometrically to relative width rel_tol. When the slope is still
/// positive at k^{-2/3}, or the boundary value is higher, the boundary is
/// reported with at_boundary set.
template <typename Real>
Alpha0Optimum<Real> optimal_alpha0(std::size_t k, Real d,
                                   Real rel_tol = Real(1e-13)) {
  using std::pow;
  using std::sqrt;
  if (k < 2) throw DomainError("optimal_alpha0: k must be >= 2");
  if (!(d > 0)) throw DomainError("optimal_alpha0: d must be > 0");
  const Real kr = detail::real_of<Real>(k);
  Real hi = pow(kr, Real(-2) / 3);
  Alpha0Optimum<Real> boundary{hi, balanced_cover_rate(k, d, hi), true};
  if (balanced_cover_rate_slope(k, d, hi) >= 0) return boundary;

  Real lo = hi * Real(1e-30);
  while (balanced_cover_rate_slope(k, d, lo) <= 0) {
    lo *= Real(1e-30);
    if (!(lo > 0)) return boundary;
  }
  while (hi / lo - 1 > rel_tol) {
    const Real mid = sqrt(lo * hi);
    if (balanced_cover_rate_slope(k, d, mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Real best = sqrt(lo * hi);
  Alpha0Optimum<Real> interior{best, balanced_cover_rate(k, d, best), false};
  return interior.rate >= boundary.rate ? interior : boundary;
}

/// max over alpha0 of the balanced cover rate at average degree d.
template <typename Real>
Real max_cover_rate(std::size_t k, Real d) {
  return optimal_alpha0(k, d).rate;
}

/// Bisection for a root of f on [lo, hi] with f(lo) > 0 >= f(hi); stops
/// when the bracket is narrower than tol. Returns the midpoint.
template <typename Real, typename F>
Real bisect_decreasing(F&& f, Real lo, Real hi, Real tol) {
  while (hi - lo > tol) {
    const Real mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

/// Golden-section search for the maximizer of a unimodal f on [lo, hi].
template <typename Real, typename F>
Real golden_section_max(F&& f, Real lo, Real hi, Real tol) {
  using std::sqrt;
  const Real ratio = (sqrt(Real(5)) - 1) / 2;
  Real a = hi - ratio * (hi - lo);
  Real b = lo + ratio * (hi - lo);
  Real fa = f(a);
  Real fb = f(b);
  while (hi - lo > tol) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = f(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = f(a);
    }
  }
  return lo + (hi - lo) / 2;
}

/// The threshold search found no crossing it could certify.
class ThresholdSearchError : public std::runtime_error {
 public:
  ThresholdSearchError(const std::string& what, long double peak_d,
                       long double peak_rate)
      : std::runtime_error(what), peak_d_(peak_d), peak_rate_(peak_rate) {}

  long double peak_d() const noexcept { return peak_d_; }
  long double peak_rate() const noexcept { return peak_rate_; }

 private:
  long double peak_d_;
  long double peak_rate_;
};

struct CoverThreshold {
  std::size_t k = 0;
  long double d = 0;          // root of max_alpha0 cover rate
  long double bracket_lo = 0;  // where the rate peaks over [k ln k, 3k ln k]
  long double bracket_hi = 0;
  long double peak_rate = 0;
  std::size_t monotone_samples = 0;
};

/// The average degree d at which the maximal balanced cover rate crosses
/// zero, found by bisection to absolute tolerance `tol`.
///
/// Over [k ln k, 3k ln k] the maximal rate rises and then falls (at small d
/// covers with few jokers are improbable), so the search first locates the
/// peak by golden section, requires a positive peak and a negative value at
/// 3k ln k, samples the descending branch to verify it is monotone, and
/// bisects there.
inline CoverThreshold cover_threshold(std::size_t k, long double tol = 1e-8L,
                                      std::size_t monotone_samples = 64) {
  using Real = long double;
  using std::log;
  if (k < 3) throw DomainError("cover_threshold: k must be >= 3");
  const Real kr = static_cast<Real>(k);
  const Real lo = kr * log(kr);
  const Real hi = 3 * kr * log(kr);
  auto g = [k](Real d) { return max_cover_rate(k, d); };

  const Real peak = golden_section_max(g, lo, hi, Real(1e-6) * lo);
  const Real peak_rate = g(peak);
  if (!(peak_rate > 0)) {
    throw ThresholdSearchError(
        "cover_threshold: cover rate never positive on [k ln k, 3k ln k]",
        peak, peak_rate);
  }
  if (!(g(hi) < 0)) {
    throw ThresholdSearchError(
        "cover_threshold: cover rate not negative at 3k ln k", peak,
        peak_rate);
  }
  Real previous = peak_rate;
  for (std::size_t i = 1; i <= monotone_samples; ++i) {
    const Real d = peak + (hi - peak) * static_cast<Real>(i) /
                              static_cast<Real>(monotone_samples);
    const Real value = g(d);
    if (value > previous) {
      throw ThresholdSearchError(
          "cover_threshold: cover rate not decreasing past its peak", peak,
          peak_rate);
    }
    previous = value;
  }
  CoverThreshold t;
  t.k = k;
  t.bracket_lo = peak;
  t.bracket_hi = hi;
  t.peak_rate = peak_rate;
  t.monotone_samples = monotone_samples;
  t.d = bisect_decreasing(g, peak, hi, tol);
  return t;
}

/// Root in d of balanced_coloring_rate, the first-moment bound for
/// colorings, found by bisection on [k ln k, 3k ln k].
inline long double coloring_threshold(std::size_t k, long double tol = 1e-8L) {
  using Real = long double;
  using std::log;
  if (k < 2) throw DomainError("coloring_threshold: k must be >= 2");
  const Real kr = static_cast<Real>(k);
  return bisect_decreasing(
      [k](Real d) { return balanced_coloring_rate(k, d); }, kr * log(kr),
      3 * kr * log(kr), tol);
}

// ---------------------------------------------------------------------------
// Named bounds on the k-colorability threshold

inline double d_first(std::size_t k) {
  const double kd = static_cast<double>(k);
  return 2 * kd * std::log(kd) - std::log(kd);
}

inline double d_an(std::size_t k) {
  const double km = static_cast<double>(k) - 1;
  return 2 * km * std::log(km);
}

/// Explicit part only; the published bound carries an additional o_k(1).
inline double d_second(std::size_t k) {
  return d_first(k) - 2 * std::log(2.0);
}

inline double d_cavity(std::size_t k) { return d_first(k) - 1; }

struct BoundsRow {
  std::size_t k = 0;
  double d_first = 0;
  double d_an = 0;
  double d_second = 0;
  bool d_second_omits_little_o = true;
  double d_cavity = 0;
  std::optional<double> d_cover;
  std::string d_cover_note;  // why d_cover is absent, if it is
};

inline BoundsRow bounds_table(std::size_t k) {
  if (k < 3) throw DomainError("bounds_table: k must be >= 3");
  BoundsRow row;
  row.k = k;
  row.d_first = d_first(k);
  row.d_an = d_an(k);
  row.d_second = d_second(k);
  row.d_cavity = d_cavity(k);
  try {
    row.d_cover = static_cast<double>(cover_threshold(k).d);
  } catch (const ThresholdSearchError& e) {
    row.d_cover_note = e.what();
  }
  return row;
}

}  // namespace covercount
