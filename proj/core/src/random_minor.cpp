#include "minorforge/random_minor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minorforge/rng.hpp"

namespace minorforge {

StarDecomposition sample_star_decomposition(const Graph& g, double p, std::uint64_t seed,
                                            std::uint64_t trial) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("sample_star_decomposition: p outside [0,1]");
  StarDecomposition sd;
  sd.color.assign(g.n, Color::blue);
  sd.choice.assign(g.n, -1);

  // Draw 1 of each vertex stream: the color.
  std::vector<SplitMix64> stream;
  stream.reserve(g.n);
  for (int v = 0; v < g.n; ++v) {
    stream.emplace_back(substream(seed, trial, static_cast<std::uint64_t>(v)));
    if (stream[v].next_double() < p) sd.color[v] = Color::red;
  }
  // Draw 2: blue vertices pick a uniform red neighbor (sorted adjacency
  // order makes the index deterministic).
  for (int v = 0; v < g.n; ++v) {
    if (sd.color[v] == Color::red) continue;
    std::vector<int> reds;
    for (int w : g.adj[v])
      if (sd.color[w] == Color::red) reds.push_back(w);
    if (reds.empty())
      sd.isolated.push_back(v);
    else
      sd.choice[v] = reds[stream[v].next_below(reds.size())];
  }
  return sd;
}

namespace {

void validate_decomposition(const Graph& g, const StarDecomposition& sd) {
  if (static_cast<int>(sd.color.size()) != g.n || static_cast<int>(sd.choice.size()) != g.n)
    throw std::invalid_argument("star decomposition does not match graph size");
  for (int v = 0; v < g.n; ++v) {
    int c = sd.choice[v];
    if (sd.color[v] == Color::red) {
      if (c != -1) throw std::invalid_argument("red vertex has a choice");
      continue;
    }
    if (c == -1) continue;  // isolated blue
    if (c < 0 || c >= g.n || sd.color[c] != Color::red || !g.has_edge(v, c))
      throw std::invalid_argument("blue vertex chose a non-adjacent or non-red vertex");
  }
}

}  // namespace

BranchModel build_random_minor(const Graph& g, const StarDecomposition& sd) {
  validate_decomposition(g, sd);
  std::vector<int> branch_of(g.n, -1);
  std::vector<std::vector<int>> branches;
  for (int v = 0; v < g.n; ++v)
    if (sd.color[v] == Color::red) {
      branch_of[v] = static_cast<int>(branches.size());
      branches.push_back({v});
    }
  for (int v = 0; v < g.n; ++v)
    if (sd.color[v] == Color::blue && sd.choice[v] != -1) {
      branch_of[v] = branch_of[sd.choice[v]];
      branches[branch_of[v]].push_back(v);
    }
  for (auto& b : branches) std::sort(b.begin(), b.end());

  BranchModel bm;
  bm.host = g;
  bm.branches = std::move(branches);
  bm.model.n = static_cast<int>(bm.branches.size());
  for (int v = 0; v < g.n; ++v) {
    if (branch_of[v] < 0) continue;
    for (int w : g.adj[v]) {
      if (w <= v || branch_of[w] < 0) continue;
      if (branch_of[v] != branch_of[w]) bm.model.add(branch_of[v], branch_of[w]);
    }
  }
  return bm;
}

std::vector<Path3> activated_paths(const Graph& g, const StarDecomposition& sd) {
  validate_decomposition(g, sd);
  std::vector<Path3> out;
  for (int x = 0; x < g.n; ++x) {
    if (sd.color[x] != Color::blue || sd.choice[x] == -1) continue;
    for (int y : g.adj[x]) {
      if (y <= x || sd.color[y] != Color::blue || sd.choice[y] == -1) continue;
      if (sd.choice[x] == sd.choice[y]) continue;
      out.push_back({sd.choice[x], x, y, sd.choice[y]});
    }
  }
  return out;
}

double activation_lb(double d, double p) {
  if (!(d > 0.0)) throw std::domain_error("activation_lb: need d > 0");
  if (!(4.0 / d <= p && p <= 0.5))
    throw std::domain_error("activation_lb: requires 4/d <= p <= 1/2");
  return 1.0 / (128.0 * d * d);
}

double coactivation_ub(double d_prime, double p, int m) {
  if (m < 2) throw std::domain_error("coactivation_ub: need m >= 2");
  if (!(p > 0.0) || !(d_prime > 0.0))
    throw std::domain_error("coactivation_ub: need positive p and d'");
  if (!(128.0 * m * std::log(static_cast<double>(m)) < p * d_prime))
    throw std::domain_error("coactivation_ub: requires 2^7 m ln(m) < p d'");
  return 2.0 * p * p / std::pow(d_prime * p / 4.0, m);
}

}  // namespace minorforge
