#include "minorforge/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "minorforge/parallel.hpp"

namespace minorforge {

PChoice default_p(PipelineKind kind, int s, int t, double eps, double d,
                  double constant_scale) {
  if (d < 1.0) throw std::invalid_argument("default_p: need d >= 1");
  if (constant_scale <= 0.0) throw std::invalid_argument("default_p: need constant_scale > 0");
  double raw = 0.0;
  if (kind == PipelineKind::kst) {
    if (s < 2 || t < s) throw std::invalid_argument("default_p: kst needs 2 <= s <= t");
    raw = 4096.0 * std::sqrt(static_cast<double>(t)) * std::pow(d, -1.0 / (2.0 * (s - 1)));
  } else {
    if (s < 3) throw std::invalid_argument("default_p: ks needs s >= 3");
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("default_p: need 0 < eps < 1");
    raw = 1024.0 * std::pow(d, 2.0 * eps - 1.0 / (2.0 * (s - 2)));
  }
  raw *= constant_scale;
  PChoice c;
  c.clamped = raw > 0.5;
  c.p = c.clamped ? 0.5 : raw;
  if (!(c.p > 0.0)) throw std::invalid_argument("default_p: computed p is not positive");
  return c;
}

long PruneResult::survivor_count() const {
  long c = 0;
  for (const auto& [_, edges] : surviving) c += static_cast<long>(edges.size());
  return c;
}

long PruneResult::max_multiplicity() const {
  long m = 0;
  for (const auto& [_, edges] : surviving) m = std::max(m, static_cast<long>(edges.size()));
  return m;
}

PruneResult prune_activated_witnesses(const Graph& g, const StarDecomposition& sd, int s) {
  if (s < 2) throw std::invalid_argument("prune_activated_witnesses: need s >= 2");
  PruneResult r;
  for (const Path3& p : activated_paths(g, sd)) {
    int v = p.v, u = p.u, x = p.x, y = p.y;
    if (v > u) {
      std::swap(v, u);
      std::swap(x, y);
    }
    r.surviving[{v, u}].emplace_back(x, y);
  }

  for (auto& [_, edges] : r.surviving) {
    std::sort(edges.begin(), edges.end());
    // Rule 1: while two middle edges are vertex-disjoint (an activated
    // 6-cycle), delete the later one.
    bool found = true;
    while (found) {
      found = false;
      for (size_t i = 0; i < edges.size() && !found; ++i)
        for (size_t j = i + 1; j < edges.size() && !found; ++j)
          if (edges[i].first != edges[j].first && edges[i].second != edges[j].second) {
            edges.erase(edges.begin() + static_cast<long>(j));
            ++r.pruned_6cycles;
            found = true;
          }
    }
    // Rule 2: the rest is a star; while it has at least s edges (an
    // activated K_{1,s}), delete the last.
    while (static_cast<int>(edges.size()) >= s) {
      edges.pop_back();
      ++r.pruned_stars;
    }
  }
  return r;
}

namespace {

struct TrialStats {
  long activated = 0;
  long pruned_6cycles = 0;
  long pruned_stars = 0;
  std::map<long, long> histogram;
  long hist_max = 0;
  int minor_order = 0;
  double avg_degree = 0.0;
  int clique_order = 0;
  bool model_valid = true;
  bool clique_complete = true;
};

double simple_avg_degree(const Graph& g) {
  return g.n > 0 ? 2.0 * static_cast<double>(g.edge_count()) / g.n : 0.0;
}

bool is_complete(const Graph& g) {
  return g.edge_count() == static_cast<long>(g.n) * (g.n - 1) / 2;
}

void fill_common(PipelineReport& rep, const Graph& g, const PipelineConfig& cfg) {
  rep.n = g.n;
  rep.edges = g.edge_count();
  rep.s = cfg.s;
  rep.t = cfg.t;
  rep.eps = cfg.eps;
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
}

void aggregate_trials(PipelineReport& rep, const std::vector<TrialStats>& trials,
                      bool best_by_clique) {
  double best_key = -std::numeric_limits<double>::infinity();
  for (size_t t = 0; t < trials.size(); ++t) {
    const TrialStats& ts = trials[t];
    rep.mean_activated += static_cast<double>(ts.activated);
    rep.mean_minor_order += static_cast<double>(ts.minor_order);
    rep.mean_avg_degree += ts.avg_degree;
    rep.mean_clique_order += static_cast<double>(ts.clique_order);
    rep.hist_max_overall = std::max(rep.hist_max_overall, ts.hist_max);
    rep.models_valid = rep.models_valid && ts.model_valid;
    rep.clique_complete = rep.clique_complete && ts.clique_complete;
    double key = best_by_clique ? static_cast<double>(ts.clique_order) : ts.avg_degree;
    if (key > best_key) {
      best_key = key;
      rep.best_trial = static_cast<int>(t);
    }
  }
  const double n = static_cast<double>(trials.size());
  rep.mean_activated /= n;
  rep.mean_minor_order /= n;
  rep.mean_avg_degree /= n;
  rep.mean_clique_order /= n;

  const TrialStats& best = trials[rep.best_trial];
  rep.activated_count = best.activated;
  rep.pruned_6cycles = best.pruned_6cycles;
  rep.pruned_stars = best.pruned_stars;
  rep.parallel_histogram = best.histogram;
  rep.minor_order = best.minor_order;
  rep.avg_degree_of_minor = best.avg_degree;
  rep.clique_minor_order = best.clique_order;
}

}  // namespace

PipelineReport kst_pipeline(const Graph& g, const PipelineConfig& cfg) {
  if (cfg.s < 2 || cfg.t < cfg.s) throw std::invalid_argument("kst_pipeline: need 2 <= s <= t");
  if (cfg.trials < 1) throw std::invalid_argument("kst_pipeline: need trials >= 1");
  PipelineReport rep;
  fill_common(rep, g, cfg);
  rep.freeness = check_kst_free(g, cfg.s, cfg.t).status;
  DegreeStats ds = degree_stats(g);
  rep.almost_regular = ds.max <= 2 * std::max(ds.min, 1);
  rep.d_used = std::max(ds.avg, 1.0);

  if (cfg.p_override) {
    rep.p = *cfg.p_override;
    rep.p_clamped = rep.p > 0.5;
    if (rep.p_clamped) rep.p = 0.5;
    if (!(rep.p > 0.0 && rep.p <= 0.5))
      throw std::invalid_argument("kst_pipeline: p override outside (0, 1/2]");
  } else {
    PChoice pc = default_p(PipelineKind::kst, cfg.s, cfg.t, cfg.eps, rep.d_used,
                           cfg.constant_scale);
    rep.p = pc.p;
    rep.p_clamped = pc.clamped;
  }

  const Graph cut = half_degree_bipartite(g).cut_graph;

  std::vector<TrialStats> trials(cfg.trials);
  for_each_trial(cfg.trials, cfg.threads, [&](long t) {
    TrialStats& ts = trials[t];
    StarDecomposition sd =
        sample_star_decomposition(cut, rep.p, cfg.seed, static_cast<std::uint64_t>(t));
    PruneResult pr = prune_activated_witnesses(cut, sd, cfg.s);
    ts.pruned_6cycles = pr.pruned_6cycles;
    ts.pruned_stars = pr.pruned_stars;
    ts.activated = pr.survivor_count() + pr.pruned_6cycles + pr.pruned_stars;
    for (const auto& [_, edges] : pr.surviving) ++ts.histogram[static_cast<long>(edges.size())];
    ts.hist_max = pr.max_multiplicity();

    BranchModel bm = build_random_minor(cut, sd);
    ts.model_valid = verify_minor_model(bm).valid();
    ts.minor_order = static_cast<int>(bm.branches.size());
    ts.avg_degree = simple_avg_degree(simplify_multigraph(bm.model));
  });

  aggregate_trials(rep, trials, /*best_by_clique=*/false);
  rep.histogram_ok = rep.hist_max_overall <= cfg.s - 1;
  return rep;
}

namespace {

// Composes a clique minor of the sampled minor back into host coordinates:
// each clique branch is the union of the star branches it contains.
std::vector<std::vector<int>> compose_branches(const BranchModel& clique_of_minor,
                                               const BranchModel& minor_of_host,
                                               const std::vector<int>& host_to_original) {
  std::vector<std::vector<int>> parts;
  parts.reserve(clique_of_minor.branches.size());
  for (const auto& branch : clique_of_minor.branches) {
    std::vector<int> part;
    for (int minor_vertex : branch)
      for (int host_vertex : minor_of_host.branches[minor_vertex])
        part.push_back(host_to_original[host_vertex]);
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

KsResult ks_pipeline(const Graph& g, const PipelineConfig& cfg) {
  if (cfg.s < 3) throw std::invalid_argument("ks_pipeline: need s >= 3");
  if (cfg.trials < 1) throw std::invalid_argument("ks_pipeline: need trials >= 1");
  KsResult out;
  PipelineReport& rep = out.report;
  fill_common(rep, g, cfg);
  rep.freeness = check_ks_free(g, cfg.s).status;
  DegreeStats ds = degree_stats(g);
  rep.almost_regular = ds.max <= 2 * std::max(ds.min, 1);
  rep.d_used = std::max(ds.avg, 1.0);

  // Trim the high-degree tail; at most half the vertices can exceed
  // 2 d sqrt(log d) when the average degree is d.
  rep.trim_threshold = 2.0 * rep.d_used * std::sqrt(std::max(std::log(rep.d_used), 1.0));
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (static_cast<double>(g.degree(v)) < rep.trim_threshold) keep.push_back(v);
  rep.trimmed_vertices = g.n - static_cast<int>(keep.size());
  Induced trimmed = induced_subgraph(g, keep);

  if (cfg.p_override) {
    rep.p = *cfg.p_override;
    rep.p_clamped = rep.p > 0.5;
    if (rep.p_clamped) rep.p = 0.5;
    if (!(rep.p > 0.0 && rep.p <= 0.5))
      throw std::invalid_argument("ks_pipeline: p override outside (0, 1/2]");
  } else {
    PChoice pc =
        default_p(PipelineKind::ks, cfg.s, cfg.t, cfg.eps, rep.d_used, cfg.constant_scale);
    rep.p = pc.p;
    rep.p_clamped = pc.clamped;
  }

  std::vector<TrialStats> trials(cfg.trials);
  std::vector<BranchModel> witnesses(cfg.trials);
  for_each_trial(cfg.trials, cfg.threads, [&](long t) {
    TrialStats& ts = trials[t];
    StarDecomposition sd =
        sample_star_decomposition(trimmed.graph, rep.p, cfg.seed, static_cast<std::uint64_t>(t));
    ts.activated = static_cast<long>(activated_paths(trimmed.graph, sd).size());

    BranchModel bm = build_random_minor(trimmed.graph, sd);
    ts.model_valid = verify_minor_model(bm).valid();
    ts.minor_order = static_cast<int>(bm.branches.size());
    for (const auto& [_, m] : bm.model.edges) ++ts.histogram[m];
    for (const auto& [_, m] : bm.model.edges) ts.hist_max = std::max(ts.hist_max, m);
    Graph simple = simplify_multigraph(bm.model);
    ts.avg_degree = simple_avg_degree(simple);

    BranchModel clique_of_minor = dense_to_clique(simple, cfg.dense_budget);
    std::vector<std::vector<int>> parts =
        compose_branches(clique_of_minor, bm, trimmed.new_to_old);
    BranchModel witness = parts.empty() ? BranchModel{g, {}, MultiGraph{0, {}}}
                                        : contract_partition(g, parts);
    ts.clique_order = static_cast<int>(witness.branches.size());
    ts.model_valid = ts.model_valid && verify_minor_model(witness).valid();
    ts.clique_complete = is_complete(simplify_multigraph(witness.model));
    witnesses[t] = std::move(witness);
  });

  aggregate_trials(rep, trials, /*best_by_clique=*/true);
  rep.histogram_ok = true;  // no pruning stage in this pipeline
  out.clique_minor = std::move(witnesses[rep.best_trial]);
  return out;
}

namespace {

struct SparseSearchStats {
  long examined = 0;
  double best_ratio = std::numeric_limits<double>::infinity();
};

// Deterministic growth from low-degree starts: repeatedly add the
// non-adjacent vertex that minimizes the resulting |N(S)|/|S|, while it
// strictly improves; then try single-vertex swaps.
std::optional<std::vector<int>> sparse_search(const Graph& g, double theta,
                                              SparseSearchStats& stats) {
  if (g.n == 0) return std::nullopt;
  std::vector<int> starts(g.n);
  for (int v = 0; v < g.n; ++v) starts[v] = v;
  std::sort(starts.begin(), starts.end(), [&](int a, int b) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
  });
  if (starts.size() > 64) starts.resize(64);

  auto ratio_of = [](long nsize, long ssize) {
    return ssize > 0 ? static_cast<double>(nsize) / static_cast<double>(ssize)
                     : std::numeric_limits<double>::infinity();
  };

  for (int start : starts) {
    std::vector<char> in_s(g.n, 0), in_n(g.n, 0);
    std::vector<int> members{start};
    in_s[start] = 1;
    long nsize = 0;
    for (int w : g.adj[start]) {
      in_n[w] = 1;
      ++nsize;
    }
    ++stats.examined;
    double ratio = ratio_of(nsize, 1);
    stats.best_ratio = std::min(stats.best_ratio, ratio);

    bool grew = true;
    while (grew) {
      grew = false;
      int best_x = -1;
      long best_gain = 0;
      double best_next = ratio;
      for (int x = 0; x < g.n; ++x) {
        if (in_s[x] || in_n[x]) continue;
        long gain = 0;
        for (int w : g.adj[x])
          if (!in_n[w] && !in_s[w]) ++gain;
        double next = ratio_of(nsize + gain, static_cast<long>(members.size()) + 1);
        if (next < best_next - 1e-12) {
          best_next = next;
          best_x = x;
          best_gain = gain;
        }
      }
      if (best_x >= 0) {
        in_s[best_x] = 1;
        members.push_back(best_x);
        for (int w : g.adj[best_x])
          if (!in_n[w]) {
            in_n[w] = 1;
          }
        nsize += best_gain;
        ratio = ratio_of(nsize, static_cast<long>(members.size()));
        ++stats.examined;
        stats.best_ratio = std::min(stats.best_ratio, ratio);
        grew = true;
      }
    }

    if (ratio < theta) {
      std::sort(members.begin(), members.end());
      return members;
    }

    // Local swaps: replace one member if that strictly lowers the ratio.
    if (members.size() >= 2) {
      long swap_budget = static_cast<long>(members.size()) + 8;
      bool swapped = true;
      while (swapped && swap_budget-- > 0 && ratio >= theta) {
        swapped = false;
        for (size_t mi = 0; mi < members.size() && !swapped; ++mi) {
          std::vector<char> s2(g.n, 0), n2(g.n, 0);
          for (size_t k = 0; k < members.size(); ++k)
            if (k != mi) s2[members[k]] = 1;
          long n2size = 0;
          for (int v = 0; v < g.n; ++v)
            if (s2[v])
              for (int w : g.adj[v])
                if (!n2[w] && !s2[w]) {
                  n2[w] = 1;
                  ++n2size;
                }
          for (int x = 0; x < g.n && !swapped; ++x) {
            if (s2[x] || n2[x] || x == members[mi]) continue;
            long gain = 0;
            for (int w : g.adj[x])
              if (!n2[w] && !s2[w]) ++gain;
            double next = ratio_of(n2size + gain, static_cast<long>(members.size()));
            ++stats.examined;
            if (next < ratio - 1e-12) {
              members[mi] = x;
              ratio = next;
              stats.best_ratio = std::min(stats.best_ratio, ratio);
              swapped = true;
              // Rebuild the flag arrays for the next iteration.
              std::fill(in_s.begin(), in_s.end(), 0);
              std::fill(in_n.begin(), in_n.end(), 0);
              nsize = 0;
              for (int m : members) in_s[m] = 1;
              for (int m : members)
                for (int w : g.adj[m])
                  if (!in_n[w] && !in_s[w]) {
                    in_n[w] = 1;
                    ++nsize;
                  }
            }
          }
        }
      }
      if (ratio < theta) {
        std::sort(members.begin(), members.end());
        return members;
      }
    }
  }
  return std::nullopt;
}

void assert_sparse_set(const Graph& g, const std::vector<int>& set, double theta) {
  std::vector<char> in_s(g.n, 0);
  for (int v : set) in_s[v] = 1;
  std::set<int> nbrs;
  for (int v : set)
    for (int w : g.adj[v]) {
      if (in_s[w]) throw std::logic_error("sparse set is not independent");
      nbrs.insert(w);
    }
  if (!(static_cast<double>(nbrs.size()) < theta * static_cast<double>(set.size())))
    throw std::logic_error("sparse set does not violate expansion");
}

}  // namespace

std::optional<std::vector<int>> find_sparse_independent_set(const Graph& g, double theta) {
  if (!(theta > 1.0)) throw std::invalid_argument("find_sparse_independent_set: need theta > 1");
  SparseSearchStats stats;
  auto set = sparse_search(g, theta, stats);
  if (set) assert_sparse_set(g, *set, theta);
  return set;
}

ExpansionOutcome expansion_decompose(const Graph& g, double d, double eps) {
  if (d < 2.0) throw std::invalid_argument("expansion_decompose: need d >= 2");
  if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("expansion_decompose: need 0 < eps < 1");
  const double theta = std::pow(d, 1.0 - eps) - 1.0;
  if (!(theta > 1.0))
    throw std::invalid_argument("expansion_decompose: d^(1-eps) must exceed 2");

  ExpansionOutcome out;
  out.target = static_cast<double>(g.n) / std::pow(d, 1.0 - eps);
  out.certificate.d = d;
  out.certificate.eps = eps;

  std::vector<int> remaining(g.n);
  for (int v = 0; v < g.n; ++v) remaining[v] = v;
  std::vector<int> acc;
  double best_ratio = std::numeric_limits<double>::infinity();
  auto finalize_ratio = [&] {
    out.certificate.best_ratio = std::isinf(best_ratio) ? 0.0 : best_ratio;
  };

  while (static_cast<double>(acc.size()) < out.target && !remaining.empty()) {
    Induced sub = induced_subgraph(g, remaining);
    SparseSearchStats stats;
    auto found = sparse_search(sub.graph, theta, stats);
    out.certificate.sets_examined += stats.examined;
    best_ratio = std::min(best_ratio, stats.best_ratio);
    if (!found) {
      out.found_set = false;
      finalize_ratio();
      return out;
    }
    assert_sparse_set(sub.graph, *found, theta);
    ++out.rounds;
    std::vector<char> drop(sub.graph.n, 0);
    for (int v : *found) {
      drop[v] = 1;
      acc.push_back(sub.new_to_old[v]);
      for (int w : sub.graph.adj[v]) drop[w] = 1;
    }
    std::vector<int> next;
    for (int v = 0; v < sub.graph.n; ++v)
      if (!drop[v]) next.push_back(sub.new_to_old[v]);
    remaining = std::move(next);
  }

  std::sort(acc.begin(), acc.end());
  out.found_set = true;
  out.independent_set = std::move(acc);
  finalize_ratio();
  return out;
}

namespace {

// Densest suffix of the min-degree peeling order: the remaining set at the
// step where the minimum remaining degree peaks.
std::vector<int> densest_core(const Graph& g) {
  std::vector<int> deg(g.n);
  std::vector<char> alive(g.n, 1);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::vector<int> removal_order;
  removal_order.reserve(g.n);
  int best_min = -1;
  size_t best_step = 0;
  for (int step = 0; step < g.n; ++step) {
    int v = -1;
    for (int w = 0; w < g.n; ++w)
      if (alive[w] && (v == -1 || deg[w] < deg[v])) v = w;
    if (deg[v] > best_min) {
      best_min = deg[v];
      best_step = removal_order.size();
    }
    removal_order.push_back(v);
    alive[v] = 0;
    for (int w : g.adj[v])
      if (alive[w]) --deg[w];
  }
  return {removal_order.begin() + static_cast<long>(best_step), removal_order.end()};
}

struct BranchState {
  const Graph& g;
  std::vector<std::vector<int>> sets;    // vertex sets of live branches
  std::vector<char> live;
  std::vector<int> owner;                // vertex -> branch, -1 free
  std::vector<std::vector<char>> adjacent;  // pairwise branch adjacency

  explicit BranchState(const Graph& g_) : g(g_), owner(g_.n, -1) {}

  int live_count() const {
    int c = 0;
    for (char l : live) c += l;
    return c;
  }

  void add_branch(int v) {
    owner[v] = static_cast<int>(sets.size());
    sets.push_back({v});
    live.push_back(1);
    for (auto& row : adjacent) row.push_back(0);
    adjacent.emplace_back(sets.size(), 0);
    refresh_adjacency(static_cast<int>(sets.size()) - 1);
  }

  void refresh_adjacency(int b) {
    for (size_t o = 0; o < sets.size(); ++o) adjacent[b][o] = adjacent[o][b] = 0;
    for (int v : sets[b])
      for (int w : g.adj[v]) {
        int o = owner[w];
        if (o >= 0 && o != b && live[o]) adjacent[b][o] = adjacent[o][b] = 1;
      }
  }

  void absorb(int b, const std::vector<int>& vertices) {
    for (int v : vertices) {
      owner[v] = b;
      sets[b].push_back(v);
      for (int w : g.adj[v]) {
        int o = owner[w];
        if (o >= 0 && o != b && live[o]) adjacent[b][o] = adjacent[o][b] = 1;
      }
    }
  }

  void drop(int b) {
    live[b] = 0;
    for (int v : sets[b]) owner[v] = -1;
    for (size_t o = 0; o < sets.size(); ++o) adjacent[b][o] = adjacent[o][b] = 0;
  }

  std::vector<std::pair<int, int>> nonadjacent_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < sets.size(); ++i) {
      if (!live[i]) continue;
      for (size_t j = i + 1; j < sets.size(); ++j)
        if (live[j] && !adjacent[i][j]) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
  }

  // Weakest live branch: fewest live adjacencies, then smallest set, then
  // highest index (drop the newest first).
  int weakest() const {
    int best = -1;
    std::tuple<int, int, int> best_key;
    for (size_t b = 0; b < sets.size(); ++b) {
      if (!live[b]) continue;
      int adj_count = 0;
      for (size_t o = 0; o < sets.size(); ++o)
        if (live[o] && adjacent[b][o]) ++adj_count;
      std::tuple<int, int, int> key(adj_count, static_cast<int>(sets[b].size()),
                                    -static_cast<int>(b));
      if (best == -1 || key < best_key) {
        best = static_cast<int>(b);
        best_key = key;
      }
    }
    return best;
  }
};

// Shortest free-interior path from branch i to branch j; returns the
// interior vertices or empty when none exists.
std::vector<int> connecting_path(const BranchState& st, int bi, int bj) {
  const Graph& g = st.g;
  std::vector<int> parent(g.n, -2);  // -2 unvisited, -1 root layer
  std::queue<int> q;
  for (int v : st.sets[bi])
    for (int w : g.adj[v])
      if (st.owner[w] == -1 && parent[w] == -2) {
        parent[w] = -1;
        q.push(w);
      }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    bool hits_target = false;
    for (int w : g.adj[v])
      if (st.owner[w] == bj) hits_target = true;
    if (hits_target) {
      std::vector<int> interior;
      for (int cur = v; cur != -1; cur = parent[cur]) interior.push_back(cur);
      std::reverse(interior.begin(), interior.end());
      return interior;
    }
    for (int w : g.adj[v])
      if (st.owner[w] == -1 && parent[w] == -2) {
        parent[w] = v;
        q.push(w);
      }
  }
  return {};
}

}  // namespace

BranchModel dense_to_clique(const Graph& g, long budget) {
  if (budget <= 0) budget = 50L * g.n + 200;
  BranchModel empty;
  empty.host = g;
  empty.model.n = 0;
  if (g.n == 0) return empty;

  std::vector<int> core = densest_core(g);
  int core_min_degree = g.n;
  {
    std::vector<char> in_core(g.n, 0);
    for (int v : core) in_core[v] = 1;
    for (int v : core) {
      int d = 0;
      for (int w : g.adj[v])
        if (in_core[w]) ++d;
      core_min_degree = std::min(core_min_degree, d);
    }
  }
  int k = std::min(static_cast<int>(core.size()), core_min_degree + 1);
  if (k < 1) k = 1;

  // Seeds: the k core vertices of highest core-internal degree.
  std::vector<int> seeds(core);
  {
    std::vector<char> in_core(g.n, 0);
    for (int v : core) in_core[v] = 1;
    auto core_deg = [&](int v) {
      int d = 0;
      for (int w : g.adj[v])
        if (in_core[w]) ++d;
      return d;
    };
    std::sort(seeds.begin(), seeds.end(), [&](int a, int b) {
      return std::pair(-core_deg(a), a) < std::pair(-core_deg(b), b);
    });
    seeds.resize(k);
  }

  BranchState st(g);
  for (int v : seeds) st.add_branch(v);

  while (budget-- > 0) {
    auto pairs = st.nonadjacent_pairs();
    if (pairs.empty()) break;

    // Gain move: the free vertex whose addition connects the most
    // currently non-adjacent branch pairs.
    int best_gain = 0, best_v = -1, best_b = -1;
    for (int v = 0; v < g.n; ++v) {
      if (st.owner[v] != -1) continue;
      std::vector<int> touching;
      for (int w : g.adj[v]) {
        int o = st.owner[w];
        if (o >= 0 && st.live[o]) touching.push_back(o);
      }
      if (touching.empty()) continue;
      std::sort(touching.begin(), touching.end());
      touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
      for (int b : touching) {
        int gain = 0;
        for (int o : touching)
          if (o != b && !st.adjacent[b][o]) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
          best_b = b;
        }
      }
    }
    if (best_gain >= 1) {
      st.absorb(best_b, {best_v});
      continue;
    }

    // Path move: connect the first non-adjacent pair reachable through
    // free vertices.
    bool connected = false;
    for (auto [bi, bj] : pairs) {
      std::vector<int> interior = connecting_path(st, bi, bj);
      if (!interior.empty()) {
        st.absorb(bi, interior);
        connected = true;
        break;
      }
    }
    if (connected) continue;

    // No move left: drop the weakest branch and retry.
    if (st.live_count() <= 1) break;
    st.drop(st.weakest());
  }

  // Budget exhausted or converged: force pairwise adjacency.
  while (!st.nonadjacent_pairs().empty() && st.live_count() > 1) st.drop(st.weakest());

  std::vector<std::vector<int>> parts;
  for (size_t b = 0; b < st.sets.size(); ++b)
    if (st.live[b]) parts.push_back(st.sets[b]);
  if (parts.empty()) return empty;
  BranchModel bm = contract_partition(g, parts);
  if (!is_complete(simplify_multigraph(bm.model)))
    throw std::logic_error("dense_to_clique: pruned branches are not pairwise adjacent");
  return bm;
}

}  // namespace minorforge
