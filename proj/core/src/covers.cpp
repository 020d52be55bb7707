#include "minorforge/covers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace minorforge {

BipartiteCut half_degree_bipartite(const Graph& g) {
  BipartiteCut r;
  r.side.assign(g.n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      int same = 0;
      for (int w : g.adj[v])
        if (r.side[w] == r.side[v]) ++same;
      // Each flip strictly increases the cut, so this terminates.
      if (2 * same > g.degree(v)) {
        r.side[v] ^= 1;
        changed = true;
      }
    }
  }
  std::vector<std::pair<int, int>> cross;
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v])
      if (v < w && r.side[v] != r.side[w]) cross.emplace_back(v, w);
  r.cut_graph = Graph::from_edges(g.n, cross);
  return r;
}

namespace {

// Min-degree-first greedy: pick the lowest-degree vertex, drop its closed
// neighborhood, repeat. On a graph with max degree < D this finds an
// independent set of size >= n/(D+1).
std::vector<int> greedy_min_degree_set(const Graph& g) {
  std::vector<int> deg(g.n);
  std::vector<char> alive(g.n, 1);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::vector<int> out;
  int remaining = g.n;
  while (remaining > 0) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (alive[v] && (best == -1 || deg[v] < deg[best])) best = v;
    out.push_back(best);
    std::vector<int> removed{best};
    for (int w : g.adj[best])
      if (alive[w]) removed.push_back(w);
    for (int r : removed) {
      alive[r] = 0;
      --remaining;
      for (int w : g.adj[r])
        if (alive[w]) --deg[w];
    }
  }
  return out;
}

std::vector<int> ramsey_set_rec(const Graph& g, int s) {
  const int m = g.n;
  if (m == 0) return {};
  if (s == 2) {
    if (g.edge_count() > 0)
      throw std::runtime_error("ramsey_independent_set: found a forbidden clique, input was not K_s-free");
    std::vector<int> all(m);
    for (int v = 0; v < m; ++v) all[v] = v;
    return all;
  }
  const double threshold = std::pow(static_cast<double>(m),
                                    static_cast<double>(s - 2) / (s - 1));
  int hub = 0;
  for (int v = 1; v < m; ++v)
    if (g.degree(v) > g.degree(hub)) hub = v;
  if (static_cast<double>(g.degree(hub)) >= threshold) {
    Induced nb = induced_subgraph(g, g.adj[hub]);
    std::vector<int> sub = ramsey_set_rec(nb.graph, s - 1);
    for (int& v : sub) v = nb.new_to_old[v];
    return sub;
  }
  return greedy_min_degree_set(g);
}

}  // namespace

std::vector<int> ramsey_independent_set(const Graph& g, int s) {
  if (s < 2) throw std::invalid_argument("ramsey_independent_set: need s >= 2");
  std::vector<int> set = ramsey_set_rec(g, s);
  std::sort(set.begin(), set.end());
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j]))
        throw std::runtime_error("ramsey_independent_set: internal error, set not independent");
  const double bound = std::pow(static_cast<double>(g.n), 1.0 / (s - 1)) / 2.0;
  if (g.n > 0 && static_cast<double>(set.size()) + 1e-9 < bound)
    throw std::runtime_error("ramsey_independent_set: size bound violated on given input");
  return set;
}

CoverResult ramsey_cover(const Graph& g, int s) {
  if (s < 2) throw std::invalid_argument("ramsey_cover: need s >= 2");
  CoverResult r;
  r.budget = 4.0 * std::pow(static_cast<double>(g.n), 1.0 - 1.0 / (s - 1));
  std::vector<char> covered(g.n, 0);
  const int need = (g.n + 1) / 2;
  while (r.covered < need) {
    std::vector<int> uncovered;
    for (int v = 0; v < g.n; ++v)
      if (!covered[v]) uncovered.push_back(v);
    Induced sub = induced_subgraph(g, uncovered);
    std::vector<int> set = ramsey_independent_set(sub.graph, s);
    for (int& v : set) v = sub.new_to_old[v];
    for (int v : set) covered[v] = 1;
    r.covered += static_cast<int>(set.size());
    r.sets.push_back(std::move(set));
  }
  return r;
}

double kst_threshold(int s, int t, int n) {
  if (s < 1 || t < s || n < 0) throw std::invalid_argument("kst_threshold: need 1 <= s <= t, n >= 0");
  const double nn = static_cast<double>(n);
  return (t - 1) * std::pow(nn, 2.0 - 1.0 / s) + static_cast<double>(s) * nn;
}

namespace {

// Depth-first enumeration of s-subsets of `side` with running intersection
// of neighbor masks; prunes as soon as fewer than t common neighbors remain.
bool kst_scan(const std::vector<std::uint64_t>& masks, int s, int t, std::vector<int>& chosen,
              int start, std::uint64_t common, std::vector<int>& out_left,
              std::vector<int>& out_common) {
  if (static_cast<int>(chosen.size()) == s) {
    out_left = chosen;
    for (int b = 0; b < 64 && static_cast<int>(out_common.size()) < t; ++b)
      if (common >> b & 1) out_common.push_back(b);
    return true;
  }
  for (int i = start; i < static_cast<int>(masks.size()); ++i) {
    std::uint64_t next = common & masks[i];
    if (std::popcount(next) < t) continue;
    chosen.push_back(i);
    if (kst_scan(masks, s, t, chosen, i + 1, next, out_left, out_common)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<KstWitness> kst_one_direction(const Graph& g, const std::vector<int>& from,
                                            const std::vector<int>& to, int s, int t) {
  std::vector<int> to_index(g.n, -1);
  for (size_t i = 0; i < to.size(); ++i) to_index[to[i]] = static_cast<int>(i);
  std::vector<std::uint64_t> masks(from.size(), 0);
  for (size_t i = 0; i < from.size(); ++i)
    for (int w : g.adj[from[i]])
      if (to_index[w] >= 0) masks[i] |= std::uint64_t{1} << to_index[w];

  std::vector<int> chosen, left, common;
  if (!kst_scan(masks, s, t, chosen, 0, ~std::uint64_t{0}, left, common)) return std::nullopt;
  KstWitness w;
  for (int i : left) w.left.push_back(from[i]);
  for (int b : common) w.right.push_back(to[b]);
  return w;
}

}  // namespace

std::optional<KstWitness> find_kst(const Graph& g, const std::vector<int>& side_a,
                                   const std::vector<int>& side_b, int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("find_kst: need 1 <= s <= t");
  if (side_a.size() > 64 || side_b.size() > 64)
    throw std::runtime_error("find_kst: side larger than 64, brute force refused");
  std::vector<int> membership(g.n, -1);
  for (int v : side_a) {
    if (v < 0 || v >= g.n || membership[v] != -1)
      throw std::invalid_argument("find_kst: bad side assignment");
    membership[v] = 0;
  }
  for (int v : side_b) {
    if (v < 0 || v >= g.n || membership[v] != -1)
      throw std::invalid_argument("find_kst: bad side assignment");
    membership[v] = 1;
  }
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v])
      if (v < w && (membership[v] == -1 || membership[w] == -1 || membership[v] == membership[w]))
        throw std::invalid_argument("find_kst: edge does not cross the declared bipartition");
  if (auto w = kst_one_direction(g, side_a, side_b, s, t)) return w;
  if (auto w = kst_one_direction(g, side_b, side_a, s, t)) return w;
  return std::nullopt;
}

std::optional<std::vector<int>> bipartition_of(const Graph& g) {
  std::vector<int> side(g.n, -1);
  for (int start = 0; start < g.n; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v]) {
        if (side[w] == -1) {
          side[w] = side[v] ^ 1;
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

namespace {

bool clique_extend(const Graph& g, std::vector<int>& current, std::vector<int>& candidates,
                   int k, std::vector<int>& out) {
  if (static_cast<int>(current.size()) == k) {
    out = current;
    return true;
  }
  // Not enough candidates left to finish the clique.
  if (static_cast<int>(current.size() + candidates.size()) < k) return false;
  std::vector<int> cands(candidates);
  for (size_t i = 0; i < cands.size(); ++i) {
    int v = cands[i];
    std::vector<int> next;
    for (size_t j = i + 1; j < cands.size(); ++j)
      if (g.has_edge(v, cands[j])) next.push_back(cands[j]);
    current.push_back(v);
    if (clique_extend(g, current, next, k, out)) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, int k) {
  if (k <= 0) return std::vector<int>{};
  if (k == 1) {
    if (g.n == 0) return std::nullopt;
    return std::vector<int>{0};
  }
  std::vector<int> all;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) >= k - 1) all.push_back(v);
  std::vector<int> current, out;
  if (clique_extend(g, current, all, k, out)) return out;
  return std::nullopt;
}

FreenessCheck check_ks_free(const Graph& g, int s) {
  FreenessCheck r;
  if (g.n > 100 || s > 5) {
    r.status = FreenessCheck::skipped;
    return r;
  }
  auto clique = find_clique(g, s);
  if (clique) {
    r.status = FreenessCheck::counterexample;
    r.witness = *clique;
  } else {
    r.status = FreenessCheck::verified_free;
  }
  return r;
}

namespace {

double choose(int n, int k) {
  double c = 1.0;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// s-subsets of all vertices with running common-neighborhood intersection
// over n-bit masks; finds t common neighbors outside the subset.
struct KstGeneralScan {
  const Graph& g;
  int s, t, words;
  std::vector<std::vector<std::uint64_t>> nbr;
  std::vector<int> chosen;
  std::vector<int> witness;

  KstGeneralScan(const Graph& g_, int s_, int t_)
      : g(g_), s(s_), t(t_), words((g_.n + 63) / 64), nbr(g_.n) {
    for (int v = 0; v < g.n; ++v) {
      nbr[v].assign(words, 0);
      for (int w : g.adj[v]) nbr[v][w / 64] |= std::uint64_t{1} << (w % 64);
    }
  }

  int count_outside(const std::vector<std::uint64_t>& mask) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(mask[w]);
    for (int v : chosen)
      if (mask[v / 64] >> (v % 64) & 1) --c;
    return c;
  }

  bool scan(int start, std::vector<std::uint64_t> common) {
    if (static_cast<int>(chosen.size()) == s) {
      witness = chosen;
      int got = 0;
      for (int v = 0; v < g.n && got < t; ++v) {
        if (!(common[v / 64] >> (v % 64) & 1)) continue;
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
        witness.push_back(v);
        ++got;
      }
      return true;
    }
    for (int v = start; v < g.n; ++v) {
      std::vector<std::uint64_t> next(common);
      for (int w = 0; w < words; ++w) next[w] &= nbr[v][w];
      chosen.push_back(v);
      if (count_outside(next) >= t) {
        if (scan(v + 1, next)) return true;
      }
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

FreenessCheck check_kst_free(const Graph& g, int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("check_kst_free: need 1 <= s <= t");
  FreenessCheck r;
  if (g.n > 100 || choose(g.n, s) > 2e6) {
    r.status = FreenessCheck::skipped;
    return r;
  }
  KstGeneralScan scan(g, s, t);
  std::vector<std::uint64_t> full(scan.words, ~std::uint64_t{0});
  if (scan.scan(0, full)) {
    r.status = FreenessCheck::counterexample;
    r.witness = scan.witness;
  } else {
    r.status = FreenessCheck::verified_free;
  }
  return r;
}

}  // namespace minorforge
