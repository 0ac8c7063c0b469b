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

// covercount: batch driver for the library. Every subcommand writes one
// JSON report (or a CSV table) that embeds its configuration; on failure it
// writes an error record instead and exits with 2 (usage), 3 (domain) or
// 4 (resource).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "covercount/covercount.hpp"
#include "covercount/serialization.hpp"

namespace cc = covercount;
using cc::json;

namespace {

constexpr const char* kSchemaVersion = "1.0";

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<double> d;
  std::vector<std::size_t> k;
  std::optional<double> ell;
  std::optional<double> delta;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::string format = "json";
  std::string output;
  std::string edges;
  std::string coloring;
  std::string model;
  std::string event = "triangle-free";
  bool enumerate = false;
  bool with_colorings = false;
  std::size_t max_colorings = 1'000'000;
  std::optional<std::size_t> max_size;
  double slack = cc::kDefaultBalanceSlack;
  std::size_t mu_max = 6;
  std::size_t nu_max = 4;
  unsigned threads = 0;
  bool progress = false;
};

json config_to_json(const Config& c) {
  json j;
  if (c.n) j["n"] = *c.n;
  if (c.m) j["m"] = *c.m;
  if (c.d) j["d"] = *c.d;
  if (!c.k.empty()) j["k"] = c.k;
  if (c.ell) j["ell"] = *c.ell;
  if (c.delta) j["delta"] = *c.delta;
  if (c.seed) j["seed"] = *c.seed;
  j["trials"] = c.trials;
  j["format"] = c.format;
  if (!c.edges.empty()) j["edges"] = c.edges;
  if (!c.coloring.empty()) j["coloring"] = c.coloring;
  if (!c.model.empty()) j["model"] = c.model;
  if (c.command == "model-compare") j["event"] = c.event;
  j["max_colorings"] = c.max_colorings;
  if (c.max_size) j["max_size"] = *c.max_size;
  if (c.command == "whiten" || c.command == "montecarlo") j["slack"] = c.slack;
  if (c.command == "ballsbins-check") {
    j["mu_max"] = c.mu_max;
    j["nu_max"] = c.nu_max;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Config checks

std::size_t need_n(const Config& c) {
  if (!c.n) throw UsageError("--n is required");
  return *c.n;
}

// Exactly one of --m and --d.
std::size_t need_m(const Config& c, std::size_t n) {
  if (c.m.has_value() == c.d.has_value()) {
    throw UsageError("give exactly one of --m and --d");
  }
  return c.m ? *c.m : cc::edges_for_degree(*c.d, n);
}

std::uint64_t need_seed(const Config& c) {
  if (!c.seed) throw UsageError("--seed is required for stochastic runs");
  return *c.seed;
}

std::size_t need_k(const Config& c) {
  if (c.k.size() != 1) throw UsageError("give a single --k");
  return c.k[0];
}

double need_ell(const Config& c) {
  if (!c.ell) throw UsageError("--ell is required");
  return *c.ell;
}

void allow_formats(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw UsageError("--format " + c.format + " is not available for " + c.command);
}

// ---------------------------------------------------------------------------
// Inputs

cc::MultiGraph named_graph(const std::string& name) {
  if (name == "triangle") return cc::complete_graph(3);
  if (name == "K222") {
    const std::vector<std::size_t> parts{2, 2, 2};
    return cc::complete_multipartite(parts);
  }
  if (name == "two-triangles") {
    return cc::disjoint_union(cc::complete_graph(3), cc::complete_graph(3));
  }
  if (name == "edge") return cc::path_graph(2);
  if (name.size() > 4 && name.starts_with("path")) {
    return cc::path_graph(std::stoul(name.substr(4)));
  }
  if (name.size() > 1 && name[0] == 'K' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    return cc::complete_graph(std::stoul(name.substr(1)));
  }
  std::ifstream in(name);
  if (!in) throw UsageError("--edges: no named graph or readable file '" + name + "'");
  return cc::read_edge_list(in);
}

cc::MultiGraph load_graph(const Config& c) {
  if (c.edges.empty()) throw UsageError("--edges is required");
  auto g = named_graph(c.edges);
  if (c.n && *c.n != g.n()) {
    throw cc::DomainError("--n " + std::to_string(*c.n) + " but the graph has " +
                          std::to_string(g.n()) + " vertices");
  }
  return g;
}

// A coloring file, or an inline comma-separated list (k from --k).
cc::PartialColoring load_partial(const Config& c, std::size_t k) {
  if (c.coloring.empty()) throw UsageError("--coloring is required");
  if (c.coloring.find_first_not_of("0123456789,") == std::string::npos) {
    std::vector<cc::Color> colors;
    std::stringstream ss(c.coloring);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw UsageError("--coloring: empty entry");
      colors.push_back(static_cast<cc::Color>(std::stoul(item)));
    }
    return cc::PartialColoring(k, std::move(colors));
  }
  std::ifstream in(c.coloring);
  if (!in) throw UsageError("--coloring: cannot read '" + c.coloring + "'");
  auto z = cc::read_coloring<cc::PartialColoring>(in);
  if (z.k() != k) throw cc::DomainError("--coloring: file has k = " + std::to_string(z.k()));
  return z;
}

cc::Coloring load_coloring(const Config& c, std::size_t k) {
  const auto z = load_partial(c, k);
  return cc::Coloring(k, std::vector<cc::Color>(z.values().begin(), z.values().end()));
}

// ---------------------------------------------------------------------------
// Parallel trials: task i runs on whichever thread claims it and writes slot
// i, so results do not depend on scheduling.

template <typename T>
std::vector<T> run_trials(const Config& c, std::size_t count,
                          const std::function<T(std::size_t)>& task) {
  std::vector<T> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  unsigned workers = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
      const std::size_t finished = ++done;
      if (c.progress && (finished % 100 == 0 || finished == count)) {
        std::fprintf(stderr, "\r%s: %zu/%zu", c.command.c_str(), finished, count);
        if (finished == count) std::fprintf(stderr, "\n");
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct Summary {
  double mean = 0;
  double stderr_ = 0;
  double min = 0;
  double max = 0;
};

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double sq = 0;
    for (double x : xs) sq += (x - s.mean) * (x - s.mean);
    s.stderr_ = std::sqrt(sq / static_cast<double>(xs.size() - 1) /
                          static_cast<double>(xs.size()));
  }
  return s;
}

json summary_json(const Summary& s) {
  return {{"mean", s.mean}, {"stderr", s.stderr_}, {"min", s.min}, {"max", s.max}};
}

std::string num(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

// Output is either a JSON value or CSV text.
struct Output {
  json result;
  std::string csv;
  std::string raw;  // written verbatim (edge-list format)
};

// ---------------------------------------------------------------------------
// Subcommands

Output cmd_generate(const Config& c) {
  allow_formats(c, {"json", "edges"});
  const std::size_t n = need_n(c);
  const std::size_t m = need_m(c, n);
  const std::uint64_t seed = need_seed(c);
  const std::string model = c.model.empty() ? "gnm" : c.model;
  cc::MultiGraph g;
  json extra;
  if (model == "gnm") {
    g = cc::sample_gnm(n, m, seed);
  } else if (model == "multi") {
    g = cc::sample_gnm_multi(n, m, seed);
  } else if (model == "planted") {
    const auto sigma = cc::round_robin_coloring(n, need_k(c));
    g = cc::sample_planted(sigma, m, seed);
    extra = cc::colors_to_json(sigma);
  } else {
    throw UsageError("--model must be gnm, multi or planted");
  }
  Output out;
  if (c.format == "edges") {
    std::ostringstream text;
    cc::write_edge_list(text, g);
    out.raw = text.str();
    return out;
  }
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  out.result = {{"model", model}, {"n", g.n()}, {"m", g.m()},
                {"simple", g.is_simple()}, {"edges", std::move(edges)}};
  if (!extra.is_null()) out.result["planted_coloring"] = std::move(extra);
  return out;
}

Output cmd_color(const Config& c) {
  allow_formats(c, {"json"});
  const auto g = load_graph(c);
  const std::size_t k = need_k(c);
  Output out;
  out.result = {{"n", g.n()}, {"m", g.m()}, {"k", k}};
  if (c.enumerate) {
    const auto all = cc::enumerate_proper(g, k, c.max_colorings);
    json list = json::array();
    for (const auto& col : all) list.push_back(cc::colors_to_json(col));
    out.result["count"] = all.size();
    out.result["colorings"] = std::move(list);
  } else {
    out.result["count"] = cc::count_proper(g, k);
  }
  if (!c.coloring.empty()) {
    const auto col = load_coloring(c, k);
    out.result["coloring"] = cc::colors_to_json(col);
    out.result["is_proper"] = cc::is_proper(g, col);
    out.result["balance"] = cc::balance_to_json(cc::balance_check(col, g.n(), k, c.slack));
  }
  return out;
}

Output cmd_whiten(const Config& c) {
  allow_formats(c, {"json"});
  const auto g = load_graph(c);
  const std::size_t k = need_k(c);
  const auto start = load_partial(c, k);
  const auto cover = cc::whiten(g, start);
  bool proper = true;
  for (const auto& e : g.edges()) {
    proper = proper && start[e.u] != 0 && start[e.u] != start[e.v];
  }
  Output out;
  out.result = {{"input", cc::colors_to_json(start)},
                {"input_is_proper_coloring", proper},
                {"cover", cc::colors_to_json(cover)},
                {"zeros", static_cast<std::size_t>(std::count(cover.values().begin(),
                                                              cover.values().end(), 0u))},
                {"cover_check", cc::cover_check_to_json(cc::is_cover(g, cover, k))},
                {"profile", cc::cover_profile_to_json(
                                cc::check_cover_profile(cover, g.n(), k, c.slack))}};
  return out;
}

Output cmd_census(const Config& c) {
  allow_formats(c, {"json"});
  const auto g = load_graph(c);
  const std::size_t k = need_k(c);
  const auto census = cc::valid_cover_census(g, k, c.max_colorings);
  std::vector<std::size_t> sizes;
  bool all_covers = true;
  for (const auto& [cover, members] : census.clusters) {
    sizes.push_back(members.size());
    all_covers = all_covers && static_cast<bool>(cc::is_cover(g, cover, k));
  }
  const auto separation = cc::cluster_separation(census);
  Output out;
  out.result = cc::census_to_json(census, c.with_colorings);
  out.result["cover_count"] = census.cover_count();
  out.result["coloring_count"] = census.coloring_count();
  out.result["cluster_sizes"] = sizes;
  out.result["keys_are_covers"] = all_covers;
  out.result["separation"] = separation ? json(*separation) : json(nullptr);
  return out;
}

json expansion_json(const cc::ExpansionResult& r) {
  json j{{"verdict", cc::to_string(r.verdict)}, {"exact", r.exact}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j;
}

Output core_single(const Config& c) {
  allow_formats(c, {"json"});
  const auto g = load_graph(c);
  const std::size_t k = need_k(c);
  const double ell = need_ell(c);
  const auto sigma = load_coloring(c, k);
  const auto d = cc::build_core(g, sigma, k, ell);
  const bool frozen = cc::core_freeze_check(g, sigma, d, k);
  const auto cover = cc::whiten(g, sigma);
  bool survives = true;
  for (cc::Vertex v : d.core) survives = survives && cover[v] != 0;

  Output out;
  out.result = {{"decomposition", cc::core_to_json(d)},
                {"freeze_check", frozen},
                {"ell_at_least_two", cc::core_survives_whitening(ell)},
                {"core_survives_whitening", survives}};
  const std::size_t max_size = c.max_size.value_or(cc::frozen_size_bound(g.n(), k));
  json expansion{{"max_size", max_size}};
  try {
    expansion.update(expansion_json(cc::expansion_violation(g, ell, max_size)));
  } catch (const cc::ExpansionBudgetExceeded& e) {
    expansion.update(expansion_json(e.partial()));
    expansion["budget_exceeded"] = true;
  }
  out.result["expansion"] = std::move(expansion);
  if (c.delta) {
    try {
      out.result["delta_frozen"] =
          cc::is_delta_frozen(g, sigma, d.core, *c.delta, k, c.max_colorings);
    } catch (const cc::ResourceError&) {
      out.result["delta_frozen"] = "unknown";
    }
  }
  return out;
}

struct CoreTrial {
  std::size_t w = 0, u = 0, y = 0, core = 0;
  bool frozen = false;
  bool survives = false;
};

Output core_trials(const Config& c) {
  allow_formats(c, {"json", "csv"});
  const std::size_t n = need_n(c);
  const std::size_t m = need_m(c, n);
  const std::size_t k = need_k(c);
  const double ell = need_ell(c);
  const std::uint64_t seed = need_seed(c);
  if (!c.model.empty() && c.model != "planted") {
    throw UsageError("core trials use the planted model");
  }
  const auto sigma = cc::round_robin_coloring(n, k);
  const auto trials = run_trials<CoreTrial>(c, c.trials, [&](std::size_t i) {
    const auto g = cc::sample_planted(sigma, m, cc::derive_seed(seed, i));
    const auto d = cc::build_core(g, sigma, k, ell);
    CoreTrial t{d.w.size(), d.u.size(), d.y.size(), d.core.size(),
                cc::core_freeze_check(g, sigma, d, k), true};
    const auto cover = cc::whiten(g, sigma);
    for (cc::Vertex v : d.core) t.survives = t.survives && cover[v] != 0;
    return t;
  });
  Output out;
  if (c.format == "csv") {
    out.csv = "trial,W,U,Y,core,freeze_check,core_survives_whitening\n";
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const auto& t = trials[i];
      out.csv += std::to_string(i) + ',' + std::to_string(t.w) + ',' + std::to_string(t.u) +
                 ',' + std::to_string(t.y) + ',' + std::to_string(t.core) + ',' +
                 (t.frozen ? "true" : "false") + ',' + (t.survives ? "true" : "false") + '\n';
    }
    return out;
  }
  std::vector<double> w, u, y, core;
  std::size_t frozen = 0, survives = 0;
  for (const auto& t : trials) {
    w.push_back(static_cast<double>(t.w));
    u.push_back(static_cast<double>(t.u));
    y.push_back(static_cast<double>(t.y));
    core.push_back(static_cast<double>(t.core));
    frozen += t.frozen;
    survives += t.frozen && t.survives;
  }
  out.result = {{"model", "planted"},
                {"n", n},
                {"m", m},
                {"ell_at_least_two", cc::core_survives_whitening(ell)},
                {"W", summary_json(summarize(w))},
                {"U", summary_json(summarize(u))},
                {"Y", summary_json(summarize(y))},
                {"core", summary_json(summarize(core))},
                {"freeze_check_true", frozen},
                {"frozen_and_survives_whitening", survives}};
  return out;
}

Output cmd_core(const Config& c) {
  return c.edges.empty() ? core_trials(c) : core_single(c);
}

Output cmd_bounds(const Config& c) {
  allow_formats(c, {"json", "csv"});
  if (c.k.empty()) throw UsageError("--k is required");
  const auto rows = run_trials<cc::BoundsRow>(
      c, c.k.size(), [&](std::size_t i) { return cc::bounds_table(c.k[i]); });
  Output out;
  if (c.format == "csv") {
    out.csv = "k,d_first,d_AN,d_second,d_cavity,d_cover\n";
    for (const auto& r : rows) {
      out.csv += std::to_string(r.k) + ',' + num(r.d_first) + ',' + num(r.d_an) + ',' +
                 num(r.d_second) + ',' + num(r.d_cavity) + ',' +
                 (r.d_cover ? num(*r.d_cover) : std::string()) + '\n';
    }
    return out;
  }
  json list = json::array();
  for (const auto& r : rows) list.push_back(cc::bounds_to_json(r));
  out.result = {{"rows", std::move(list)}};
  return out;
}

// All class-size vectors nu_1..nu_k summing to n, lexicographic.
std::vector<std::vector<std::size_t>> profiles(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> nu(k, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left) {
    if (i + 1 == k) {
      nu[i] = left;
      out.push_back(nu);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      nu[i] = x;
      fill(i + 1, left - x);
    }
  };
  if (k > 0) fill(0, n);
  return out;
}

struct MonteCarloTrial {
  std::vector<double> counts;  // per profile
  std::size_t colorings = 0;
  std::size_t balanced = 0;
  std::size_t z1 = 0, z2 = 0, z3 = 0;
};

Output cmd_montecarlo(const Config& c) {
  allow_formats(c, {"json", "csv"});
  const std::size_t n = need_n(c);
  const std::size_t m = need_m(c, n);
  const std::size_t k = need_k(c);
  const std::uint64_t seed = need_seed(c);
  if (k < 2) throw cc::DomainError("montecarlo: k must be >= 2");
  if (c.trials < 1) throw UsageError("--trials must be >= 1");
  const std::string model = c.model.empty() ? "multi" : c.model;
  if (model != "multi" && model != "gnm") throw UsageError("--model must be multi or gnm");
  const auto all_profiles = profiles(n, k);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < all_profiles.size(); ++i) index[all_profiles[i]] = i;

  const auto trials = run_trials<MonteCarloTrial>(c, c.trials, [&](std::size_t i) {
    const auto s = cc::derive_seed(seed, i);
    const auto g = model == "multi" ? cc::sample_gnm_multi(n, m, s) : cc::sample_gnm(n, m, s);
    MonteCarloTrial t;
    t.counts.assign(all_profiles.size(), 0);
    std::vector<std::size_t> nu(k);
    std::size_t seen = 0;
    cc::for_each_proper(g, k, [&](std::span<const cc::Color> colors) {
      if (++seen > c.max_colorings) {
        throw cc::ResourceError("montecarlo: more than max_colorings colorings", c.max_colorings);
      }
      std::fill(nu.begin(), nu.end(), 0);
      for (cc::Color x : colors) ++nu[x - 1];
      ++t.counts[index.at(nu)];
      const cc::Coloring col(k, {colors.begin(), colors.end()});
      t.balanced += cc::balance_check(nu, n, k).pass;
      const auto profile = cc::check_cover_profile(cc::whiten(g, col), n, k, c.slack);
      t.z1 += profile.z1;
      t.z2 += profile.z2;
      t.z3 += profile.z3;
    });
    t.colorings = seen;
    return t;
  });

  json rows = json::array();
  std::string csv = "nu,mean,stderr,exact,z\n";
  for (std::size_t p = 0; p < all_profiles.size(); ++p) {
    std::vector<double> xs;
    xs.reserve(trials.size());
    for (const auto& t : trials) xs.push_back(t.counts[p]);
    const auto s = summarize(xs);
    const double exact = cc::expected_colorings_exact(n, m, all_profiles[p]);
    const bool has_z = s.stderr_ > 0;
    const double z = has_z ? (s.mean - exact) / s.stderr_ : 0.0;
    rows.push_back({{"nu", all_profiles[p]},
                    {"mean", s.mean},
                    {"stderr", s.stderr_},
                    {"exact", exact},
                    {"z", has_z ? json(z) : json(nullptr)},
                    {"within_3_stderr", std::abs(s.mean - exact) <= 3 * s.stderr_ + 1e-12 * exact}});
    std::string label;
    for (std::size_t i = 0; i < k; ++i) label += (i ? " " : "") + std::to_string(all_profiles[p][i]);
    csv += label + ',' + num(s.mean) + ',' + num(s.stderr_) + ',' + num(exact) + ',' +
           (has_z ? num(z) : std::string()) + '\n';
  }
  Output out;
  if (c.format == "csv") {
    out.csv = std::move(csv);
    return out;
  }
  std::size_t colorings = 0, balanced = 0, z1 = 0, z2 = 0, z3 = 0;
  for (const auto& t : trials) {
    colorings += t.colorings;
    balanced += t.balanced;
    z1 += t.z1;
    z2 += t.z2;
    z3 += t.z3;
  }
  out.result = {{"model", model},
                {"n", n},
                {"m", m},
                {"profiles", std::move(rows)},
                {"colorings_seen", colorings},
                {"balance_pass", balanced},
                {"cover_profile", {{"z1", z1}, {"z2", z2}, {"z3", z3}}}};
  return out;
}

bool has_triangle(const cc::MultiGraph& g) {
  std::vector<std::set<cc::Vertex>> adj(g.n() + 1);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    for (cc::Vertex w : adj[e.u]) {
      if (w != e.v && adj[e.v].count(w)) return true;
    }
  }
  return false;
}

Output cmd_model_compare(const Config& c) {
  allow_formats(c, {"json"});
  const std::size_t n = need_n(c);
  const std::size_t m = need_m(c, n);
  const std::uint64_t seed = need_seed(c);
  if (c.trials < 1) throw UsageError("--trials must be >= 1");
  std::function<bool(const cc::MultiGraph&)> event;
  if (c.event == "triangle-free") {
    event = [](const cc::MultiGraph& g) { return !has_triangle(g); };
  } else if (c.event == "colorable") {
    const std::size_t k = need_k(c);
    event = [k](const cc::MultiGraph& g) {
      return cc::for_each_proper(g, k, [](std::span<const cc::Color>) { return false; }) > 0;
    };
  } else {
    throw UsageError("--event must be triangle-free or colorable");
  }
  const auto hits = run_trials<std::pair<int, int>>(c, c.trials, [&](std::size_t i) {
    return std::pair<int, int>{event(cc::sample_gnm(n, m, cc::derive_seed(seed, 2 * i))),
                               event(cc::sample_gnm_multi(n, m, cc::derive_seed(seed, 2 * i + 1)))};
  });
  double simple = 0, multi = 0;
  for (const auto& [a, b] : hits) {
    simple += a;
    multi += b;
  }
  const double t = static_cast<double>(c.trials);
  const double p_simple = simple / t;
  const double p_multi = multi / t;
  const double se_simple = std::sqrt(p_simple * (1 - p_simple) / t);
  const double se_multi = std::sqrt(p_multi * (1 - p_multi) / t);
  const double d = 2.0 * static_cast<double>(m) / static_cast<double>(n);
  const double bound = std::exp(d + 2 * d * d);
  Output out;
  out.result = {{"event", c.event},
                {"n", n},
                {"m", m},
                {"average_degree", d},
                {"p_gnm", p_simple},
                {"stderr_gnm", se_simple},
                {"p_multi", p_multi},
                {"stderr_multi", se_multi},
                {"ratio", p_multi > 0 ? json(p_simple / p_multi) : json(nullptr)},
                {"constant_bound", bound},
                {"within_bound", p_simple <= bound * (p_multi + 3 * se_multi)}};
  return out;
}

Output cmd_ballsbins(const Config& c) {
  allow_formats(c, {"json"});
  double worst = 0;
  double constant = 0;
  std::size_t cases = 0;
  for (std::size_t mu = 0; mu <= c.mu_max; ++mu) {
    for (std::size_t nu = 1; nu <= c.nu_max; ++nu) {
      for (const auto& t : profiles(mu, nu)) {
        const double balls = cc::balls_bins_joint(mu, t);
        if (mu > 0) constant = std::max(constant, cc::poissonization_constant(mu, t));
        for (double lambda : {0.5, 1.0, 5.0}) {
          ++cases;
          worst = std::max(worst, std::abs(balls - cc::poisson_conditioned_joint(lambda, t, mu)));
        }
      }
    }
  }
  Output out;
  out.result = {{"cases", cases},
                {"lambdas", {0.5, 1.0, 5.0}},
                {"max_difference", worst},
                {"identity_holds", worst <= 1e-12},
                {"max_constant", constant},
                {"constant_at_most_3", constant <= 3}};
  return out;
}

// ---------------------------------------------------------------------------

void emit(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw UsageError("cannot write --output " + c.output);
  out << text;
}

int fail(const std::string& command, const char* kind, const std::string& message, int code) {
  const json record{{"schema_version", kSchemaVersion},
                    {"command", command},
                    {"error", {{"kind", kind}, {"message", message}}}};
  std::cout << record.dump(2) << '\n';
  std::cerr << "covercount: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover counting for random graph colorings"};
  app.require_subcommand(1);
  Config cfg;

  const std::map<std::string, std::pair<std::string, std::function<Output(const Config&)>>>
      commands = {
          {"generate", {"Sample a graph from G(n,m), G'(n,m) or the planted model", cmd_generate}},
          {"color", {"Count or enumerate proper k-colorings", cmd_color}},
          {"whiten", {"Whiten a coloring and check the result is a cover", cmd_whiten}},
          {"census", {"Group all proper colorings by their cover", cmd_census}},
          {"core", {"Core construction for one coloring, or statistics over planted trials", cmd_core}},
          {"bounds", {"Tabulate the named threshold bounds for a list of k", cmd_bounds}},
          {"montecarlo", {"Empirical coloring counts against their exact expectation", cmd_montecarlo}},
          {"model-compare", {"Event probability under G(n,m) and G'(n,m)", cmd_model_compare}},
          {"ballsbins-check", {"Balls-in-bins against conditioned Poisson on a grid", cmd_ballsbins}},
      };

  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--n", cfg.n, "Vertex count");
    sub->add_option("--m", cfg.m, "Edge count");
    sub->add_option("--d", cfg.d, "Average degree; m = ceil(d n / 2)");
    sub->add_option("--k", cfg.k, "Color count (bounds: comma-separated list)")->delimiter(',');
    sub->add_option("--ell", cfg.ell, "Core parameter");
    sub->add_option("--delta", cfg.delta, "Frozen-set fraction");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "csv or json (generate: json or edges)");
    sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
    sub->add_option("--edges", cfg.edges,
                    "Edge-list file or triangle, K222, two-triangles, edge, pathN, KN");
    sub->add_option("--coloring", cfg.coloring, "Coloring file or comma-separated colors");
    sub->add_option("--model", cfg.model, "gnm, multi or planted");
    sub->add_option("--event", cfg.event, "model-compare: triangle-free or colorable");
    sub->add_flag("--enumerate", cfg.enumerate, "color: list the colorings");
    sub->add_flag("--with-colorings", cfg.with_colorings, "census: list each cluster");
    sub->add_option("--max-colorings", cfg.max_colorings, "Enumeration budget");
    sub->add_option("--max-size", cfg.max_size, "core: expansion search size bound");
    sub->add_option("--slack", cfg.slack, "Class balance slack");
    sub->add_option("--mu-max", cfg.mu_max, "ballsbins-check: largest ball count");
    sub->add_option("--nu-max", cfg.nu_max, "ballsbins-check: largest bin count");
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    sub->add_flag("--progress", cfg.progress, "Trial progress on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name(),
                "usage", e.what(), 2);
  }

  cfg.command = app.get_subcommands()[0]->get_name();
  try {
    const Output out = commands.at(cfg.command).second(cfg);
    if (!out.raw.empty()) {
      emit(cfg, out.raw);
    } else if (!out.csv.empty()) {
      emit(cfg, out.csv);
    } else {
      const json report{{"schema_version", kSchemaVersion},
                        {"command", cfg.command},
                        {"config", config_to_json(cfg)},
                        {"result", out.result}};
      emit(cfg, report.dump(2) + "\n");
    }
    return 0;
  } catch (const UsageError& e) {
    return fail(cfg.command, "usage", e.what(), 2);
  } catch (const cc::ResourceError& e) {
    return fail(cfg.command, "resource", e.what(), 4);
  } catch (const std::domain_error& e) {
    return fail(cfg.command, "domain", e.what(), 3);
  } catch (const std::invalid_argument& e) {
    return fail(cfg.command, "usage", e.what(), 2);
  } catch (const std::exception& e) {
    return fail(cfg.command, "error", e.what(), 1);
  }
}
