#include "minorforge/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

#include "minorforge/rng.hpp"

namespace minorforge {

namespace {

constexpr std::uint64_t kPathSampleTag = 0x70617468;

void validate_path(const Graph& g, const Path3& p) {
  int vs[4] = {p.v, p.x, p.y, p.u};
  for (int a : vs)
    if (a < 0 || a >= g.n) throw std::invalid_argument("path vertex out of range");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) throw std::invalid_argument("path vertices not distinct");
  if (!g.has_edge(p.v, p.x) || !g.has_edge(p.x, p.y) || !g.has_edge(p.y, p.u))
    throw std::invalid_argument("path edges missing in host");
}

bool path_activated(const StarDecomposition& sd, const Path3& p) {
  return sd.color[p.v] == Color::red && sd.color[p.u] == Color::red &&
         sd.color[p.x] == Color::blue && sd.color[p.y] == Color::blue &&
         sd.choice[p.x] == p.v && sd.choice[p.y] == p.u;
}

Estimate make_estimate(long hits, long trials) {
  Estimate e;
  e.trials = trials;
  e.value = trials > 0 ? static_cast<double>(hits) / trials : 0.0;
  e.std_err = trials > 0 ? std::sqrt(e.value * (1.0 - e.value) / trials) : 0.0;
  return e;
}

}  // namespace

double exact_activation(const Graph& g, const std::vector<Path3>& paths, double p) {
  if (g.n > 12) throw std::invalid_argument("exact_activation: host too large (max 12 vertices)");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("exact_activation: p outside [0,1]");
  if (paths.empty()) throw std::invalid_argument("exact_activation: no paths given");
  for (const auto& path : paths) validate_path(g, path);

  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    auto red = [&](int v) { return (mask >> v & 1) != 0; };
    bool consistent = true;
    for (const auto& path : paths)
      if (!red(path.v) || !red(path.u) || red(path.x) || red(path.y)) {
        consistent = false;
        break;
      }
    if (!consistent) continue;

    double prob = 1.0;
    for (int v = 0; v < g.n; ++v) prob *= red(v) ? p : 1.0 - p;
    if (prob == 0.0) continue;

    // Each required chooser picks uniformly among its red neighbors; the
    // event needs one specific neighbor. Choices of chooser x in two paths
    // must agree, otherwise this coloring contributes nothing.
    std::set<std::pair<int, int>> required;  // (chooser, target)
    for (const auto& path : paths) {
      required.insert({path.x, path.v});
      required.insert({path.y, path.u});
    }
    bool feasible = true;
    std::set<int> choosers;
    for (const auto& [x, target] : required) {
      if (!choosers.insert(x).second) {
        feasible = false;  // same chooser required to pick two targets
        break;
      }
      int red_deg = 0;
      for (int w : g.adj[x])
        if (red(w)) ++red_deg;
      if (red_deg == 0) {
        feasible = false;
        break;
      }
      prob /= red_deg;
    }
    if (feasible) total += prob;
  }
  return total;
}

Estimate estimate_activation(const Graph& g, const std::vector<Path3>& paths, double p,
                             long trials, std::uint64_t seed) {
  if (paths.empty()) throw std::invalid_argument("estimate_activation: no paths given");
  if (trials <= 0) throw std::invalid_argument("estimate_activation: need trials > 0");
  for (const auto& path : paths) validate_path(g, path);
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    StarDecomposition sd = sample_star_decomposition(g, p, seed, static_cast<std::uint64_t>(t));
    bool all = true;
    for (const auto& path : paths)
      if (!path_activated(sd, path)) {
        all = false;
        break;
      }
    if (all) ++hits;
  }
  return make_estimate(hits, trials);
}

bool ActivationBoundsReport::any_fail() const {
  for (const auto& c : lower)
    if (c.status == BoundCheck::fail) return true;
  return upper.status == BoundCheck::fail;
}

namespace {

// Seeded sample of one 3-path: random start, then uniform neighbor steps
// avoiding repeats. Returns false when a dead end is hit.
bool sample_path(const Graph& g, SplitMix64& rng, Path3& out) {
  if (g.n == 0) return false;
  int v = static_cast<int>(rng.next_below(g.n));
  if (g.degree(v) == 0) return false;
  int x = g.adj[v][rng.next_below(g.adj[v].size())];
  std::vector<int> ys;
  for (int w : g.adj[x])
    if (w != v) ys.push_back(w);
  if (ys.empty()) return false;
  int y = ys[rng.next_below(ys.size())];
  std::vector<int> us;
  for (int w : g.adj[y])
    if (w != v && w != x) us.push_back(w);
  if (us.empty()) return false;
  out = {v, x, y, us[rng.next_below(us.size())]};
  return true;
}

// Looks for a second path v-x2-y2-u sharing both endpoints with `first`.
// Prefers internally disjoint pairs (m = 4), falls back to pairs sharing
// the first internal vertex (m = 3).
bool find_pair(const Graph& g, const Path3& first, Path3& second, int& m) {
  int v = first.v, u = first.u;
  for (int x2 : g.adj[v]) {
    if (x2 == first.x || x2 == first.y || x2 == u) continue;
    for (int y2 : g.adj[x2]) {
      if (y2 == v || y2 == u || y2 == first.x || y2 == first.y) continue;
      if (!g.has_edge(y2, u)) continue;
      second = {v, x2, y2, u};
      m = 4;
      return true;
    }
  }
  for (int y2 : g.adj[first.x]) {
    if (y2 == v || y2 == u || y2 == first.y) continue;
    if (!g.has_edge(y2, u)) continue;
    second = {v, first.x, y2, u};
    m = 3;
    return true;
  }
  return false;
}

}  // namespace

ActivationBoundsReport check_activation_bounds(const Graph& g, double p, long trials,
                                               std::uint64_t seed, int n_paths) {
  ActivationBoundsReport r;
  DegreeStats ds = degree_stats(g);
  const double d = ds.max;
  SplitMix64 rng(substream(seed, kPathSampleTag));

  std::set<std::array<int, 4>> seen;
  for (int attempt = 0; attempt < 200 * n_paths && static_cast<int>(r.sampled_paths.size()) < n_paths;
       ++attempt) {
    Path3 path;
    if (!sample_path(g, rng, path)) continue;
    if (seen.insert({path.v, path.x, path.y, path.u}).second) r.sampled_paths.push_back(path);
  }

  // Single-path lower bound.
  bool lower_applicable = d > 0 && 4.0 / d <= p && p <= 0.5;
  for (const auto& path : r.sampled_paths) {
    BoundCheck c;
    if (!lower_applicable) {
      c.status = BoundCheck::skipped;
      c.detail = "skipped: bound inapplicable";
    } else {
      c.bound = activation_lb(d, p);
      c.estimate = estimate_activation(g, {path}, p, trials, seed);
      c.status = c.estimate.value >= c.bound - 3.0 * c.estimate.std_err ? BoundCheck::pass
                                                                        : BoundCheck::fail;
      c.detail = "single-path activation vs lower bound";
    }
    r.lower.push_back(c);
  }

  // Coactivation upper bound: gate first, then hunt for a qualifying pair.
  r.upper.status = BoundCheck::skipped;
  r.upper.detail = "skipped: bound inapplicable";
  const double d_prime = ds.min;
  for (int m_try : {4, 3}) {
    if (!(128.0 * m_try * std::log(static_cast<double>(m_try)) < p * d_prime)) continue;
    for (const auto& first : r.sampled_paths) {
      Path3 second;
      int m = 0;
      if (!find_pair(g, first, second, m)) continue;
      if (m != m_try) continue;
      r.pair = {first, second};
      r.upper.bound = coactivation_ub(d_prime, p, m);
      r.upper.estimate = estimate_activation(g, r.pair, p, trials, seed);
      r.upper.status = r.upper.estimate.value <= r.upper.bound + 3.0 * r.upper.estimate.std_err
                           ? BoundCheck::pass
                           : BoundCheck::fail;
      r.upper.detail = "pair coactivation vs upper bound, m=" + std::to_string(m);
      break;
    }
    if (r.upper.status != BoundCheck::skipped) break;
  }
  return r;
}

ConcentrationReport vertex_concentration(const Graph& g, double p, long trials,
                                         std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("vertex_concentration: need trials > 0");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("vertex_concentration: p outside [0,1]");
  ConcentrationReport r;
  r.bound = std::exp(-p * g.n / 3.0);
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    StarDecomposition sd = sample_star_decomposition(g, p, seed, static_cast<std::uint64_t>(t));
    long reds = std::count(sd.color.begin(), sd.color.end(), Color::red);
    if (static_cast<double>(reds) > 2.0 * p * g.n) ++hits;
  }
  r.freq_above = make_estimate(hits, trials);
  r.status = r.freq_above.value <= r.bound + 3.0 * r.freq_above.std_err ? BoundCheck::pass
                                                                        : BoundCheck::fail;
  return r;
}

}  // namespace minorforge
