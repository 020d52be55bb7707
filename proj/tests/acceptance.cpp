// Acceptance gate: eleven standing criteria, one line of output each.
// Every tolerance is pinned here as a literal; the binary exits nonzero if
// any criterion fails, including its runtime cap.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "minorforge/covers.hpp"
#include "minorforge/generators.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/path_select.hpp"
#include "minorforge/pipelines.hpp"
#include "minorforge/random_minor.hpp"
#include "minorforge/verify.hpp"

using namespace minorforge;

namespace {

long count_red(const StarDecomposition& sd) {
  return std::count(sd.color.begin(), sd.color.end(), Color::red);
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// 1. Minor validity: >= 10^4 contraction runs over >= 10 hosts from all four
//    generator families, every model verified, branch count == red count.

bool criterion_minor_validity(std::string& detail) {
  struct Host {
    const char* name;
    Graph g;
  };
  std::vector<Host> hosts;
  hosts.push_back({"gnp_200", gen_gnp(200, 0.05, 11)});
  hosts.push_back({"gnp_500", gen_gnp(500, 0.02, 12)});
  hosts.push_back({"gnp_100_dense", gen_gnp(100, 0.3, 13)});
  hosts.push_back({"regular_64_16", gen_random_regular(64, 16, 14)});
  hosts.push_back({"regular_200_6", gen_random_regular(200, 6, 15)});
  hosts.push_back({"regular_500_4", gen_random_regular(500, 4, 16)});
  hosts.push_back({"blowup_c5_10", gen_blowup(corpus::cycle(5), 10)});
  hosts.push_back({"blowup_petersen_8", gen_blowup(corpus::petersen(), 8)});
  hosts.push_back({"blowup_c7_40", gen_blowup(corpus::cycle(7), 40)});
  hosts.push_back({"incidence_3", gen_incidence(3)});
  hosts.push_back({"incidence_5", gen_incidence(5)});
  hosts.push_back({"incidence_9", gen_incidence(9)});

  const long trials_per_host = 850;  // 12 hosts * 850 = 10200 >= 10^4
  const double ps[4] = {0.1, 0.25, 0.4, 0.5};
  long runs = 0, invalid = 0, branch_mismatch = 0;
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    const Graph& g = hosts[h].g;
    if (g.n > 500) {
      detail = fmt("host %s exceeds n=500", hosts[h].name);
      return false;
    }
    for (long t = 0; t < trials_per_host; ++t) {
      double p = ps[t % 4];
      StarDecomposition sd = sample_star_decomposition(g, p, 1000 + h, t);
      BranchModel bm = build_random_minor(g, sd);
      ++runs;
      if (!verify_minor_model(bm).valid()) ++invalid;
      if (static_cast<long>(bm.branches.size()) != count_red(sd)) ++branch_mismatch;
    }
  }
  detail = fmt("%ld runs over %zu hosts: %ld invalid models, %ld branch/red mismatches", runs,
               hosts.size(), invalid, branch_mismatch);
  return runs >= 10000 && hosts.size() >= 10 && invalid == 0 && branch_mismatch == 0;
}

// ---------------------------------------------------------------------------
// 2. Exact activation oracle vs Monte Carlo on the two enumeration fixtures.

bool criterion_exact_oracle(std::string& detail) {
  struct Fixture {
    const char* name;
    Graph g;
    Path3 path;
    double exact_at_half;  // frozen before implementation
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"p4", corpus::path(4), {0, 1, 2, 3}, 0.0625});
  fixtures.push_back({"pendant5", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}),
                      {0, 1, 2, 3}, 0.046875});

  for (const auto& f : fixtures) {
    double exact = exact_activation(f.g, {f.path}, 0.5);
    if (std::fabs(exact - f.exact_at_half) > 1e-12) {
      detail = fmt("%s: exact %.12f != frozen %.12f", f.name, exact, f.exact_at_half);
      return false;
    }
  }

  const long trials = 100000;
  const double ps[2] = {0.2, 0.5};
  int cells = 0, hits = 0;
  for (const auto& f : fixtures) {
    for (double p : ps) {
      double exact = exact_activation(f.g, {f.path}, p);
      double sigma = std::sqrt(exact * (1.0 - exact) / trials);
      for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Estimate est = estimate_activation(f.g, {f.path}, p, trials, seed);
        ++cells;
        if (std::fabs(est.value - exact) <= 3.0 * sigma) ++hits;
      }
    }
  }
  detail = fmt("exact values match; %d/%d Monte Carlo cells within 3 sigma", hits, cells);
  return hits * 100 >= cells * 99;  // >= 99% of cells
}

// ---------------------------------------------------------------------------
// 3. Activation lower bound on the 16-regular host with 64 vertices.

bool criterion_activation_lower(std::string& detail) {
  Graph g = gen_random_regular(64, 16, 33);
  ActivationBoundsReport rep = check_activation_bounds(g, 0.25, 100000, 33, 4);
  int passes = 0;
  for (const auto& c : rep.lower) {
    if (std::fabs(c.bound - 1.0 / 32768.0) > 1e-15) {
      detail = fmt("lower bound %.3e != 1/32768", c.bound);
      return false;
    }
    if (c.status == BoundCheck::fail) {
      detail = fmt("a lower check failed: estimate %.3e < bound %.3e - 3 sigma",
                   c.estimate.value, c.bound);
      return false;
    }
    if (c.status == BoundCheck::pass) ++passes;
  }
  detail = fmt("%d/%zu sampled paths beat 1/32768 - 3 sigma at 10^5 trials", passes,
               rep.lower.size());
  return passes == static_cast<int>(rep.lower.size()) && passes > 0;
}

// ---------------------------------------------------------------------------
// 4. Chernoff gate on the red-vertex count: n=100, p=0.3.

bool criterion_chernoff(std::string& detail) {
  Graph g(100);  // the bound concerns only the coloring stage
  ConcentrationReport rep = vertex_concentration(g, 0.3, 100000, 44);
  if (std::fabs(rep.bound - std::exp(-10.0)) > 1e-15) {
    detail = fmt("bound %.3e != e^-10", rep.bound);
    return false;
  }
  detail = fmt("freq(#red > 60) = %.1e <= e^-10 + 3 sigma (%ld trials)", rep.freq_above.value,
               rep.freq_above.trials);
  return rep.status == BoundCheck::pass;
}

// ---------------------------------------------------------------------------
// 5. Parallel-edge claim: s=t=2 pruning leaves multiplicity <= 1, always.

bool criterion_parallel_edges(std::string& detail) {
  struct Host {
    const char* name;
    Graph g;
  };
  const Host hosts[2] = {{"heawood", corpus::heawood()}, {"incidence_3", gen_incidence(3)}};
  int runs = 0, clean = 0;
  for (const auto& h : hosts) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      PipelineConfig cfg;
      cfg.s = 2;
      cfg.t = 2;
      cfg.trials = 1;
      cfg.seed = seed;
      PipelineReport rep = kst_pipeline(h.g, cfg);
      ++runs;
      if (rep.histogram_ok && rep.hist_max_overall <= 1 && rep.models_valid) ++clean;
    }
  }
  detail = fmt("%d/%d runs kept post-pruning multiplicity <= 1", clean, runs);
  return clean == runs && runs == 200;
}

// ---------------------------------------------------------------------------
// 6. Activated-path count against the finite-size expectation bound.

bool criterion_activated_count(std::string& detail) {
  Graph g = gen_incidence(3);
  Graph cut = half_degree_bipartite(g).cut_graph;
  DegreeStats ds = degree_stats(cut);

  PChoice pc = default_p(PipelineKind::kst, 2, 2, 0.05, degree_stats(g).avg);
  if (!pc.clamped || pc.p != 0.5) {
    detail = fmt("expected the default p to clamp to 1/2, got %.6f", pc.p);
    return false;
  }
  const double p = pc.p;
  const double bound = (1.0 - p) * (1.0 - p) *
                       (1.0 - 2.0 * std::pow(1.0 - p, ds.min - 1.0)) *
                       static_cast<double>(cut.edge_count());
  if (std::fabs(bound - 9.75) > 1e-9) {  // 0.25 * (1 - 2/8) * 52 on the full bipartition
    detail = fmt("expectation bound %.6f != frozen 9.75", bound);
    return false;
  }

  const int trials = 100;
  std::vector<double> counts(trials);
  for (int t = 0; t < trials; ++t) {
    StarDecomposition sd = sample_star_decomposition(cut, p, 606, t);
    counts[t] = static_cast<double>(activated_paths(cut, sd).size());
  }
  double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / trials;
  double var = 0.0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var /= trials - 1;
  double se = std::sqrt(var / trials);
  detail = fmt("mean activated %.3f >= %.3f - 3*%.3f over %d trials", mean, bound, se, trials);
  return mean >= bound - 3.0 * se;
}

// ---------------------------------------------------------------------------
// 7. Cover lemma invariants over verified clique-free fixtures.

bool check_cover(const Graph& g, int s, std::string& why) {
  if (check_ks_free(g, s).status != FreenessCheck::verified_free) {
    why = "freeness not verified";
    return false;
  }
  CoverResult cr = ramsey_cover(g, s);
  std::vector<int> owner(g.n, -1);
  for (std::size_t i = 0; i < cr.sets.size(); ++i)
    for (int v : cr.sets[i]) {
      if (owner[v] != -1) {
        why = "sets overlap";
        return false;
      }
      owner[v] = static_cast<int>(i);
    }
  for (int v = 0; v < g.n; ++v) {
    if (owner[v] == -1) continue;
    for (int w : g.adj[v])
      if (owner[w] == owner[v]) {
        why = "a set is not independent";
        return false;
      }
  }
  long covered = std::count_if(owner.begin(), owner.end(), [](int x) { return x != -1; });
  if (covered != cr.covered || covered < (g.n + 1) / 2) {
    why = "coverage below half";
    return false;
  }
  double budget = 4.0 * std::pow(g.n, 1.0 - 1.0 / (s - 1));
  if (static_cast<double>(cr.sets.size()) > budget + 1e-9) {
    why = "set count above budget";
    return false;
  }
  return true;
}

bool criterion_cover(std::string& detail) {
  int graphs = 0, ok = 0;
  std::string why;
  for (const auto& f : corpus::triangle_free()) {
    if (f.graph.n > 100) continue;
    ++graphs;
    if (check_cover(f.graph, 3, why)) {
      ++ok;
    } else {
      detail = fmt("s=3 failed on %s: %s", f.name.c_str(), why.c_str());
      return false;
    }
    // Triangle-free graphs are K4-free too, so they count for s=4 as well.
    if (check_cover(f.graph, 4, why)) {
      ++ok;
    } else {
      detail = fmt("s=4 failed on %s: %s", f.name.c_str(), why.c_str());
      return false;
    }
  }
  for (const auto& f : corpus::k4_free_with_triangles()) {
    ++graphs;
    if (check_cover(f.graph, 4, why)) {
      ++ok;
    } else {
      detail = fmt("s=4 failed on %s: %s", f.name.c_str(), why.c_str());
      return false;
    }
  }
  detail = fmt("%d invariant checks over %d verified clique-free graphs", ok, graphs);
  return graphs >= 20;
}

// ---------------------------------------------------------------------------
// 8. Half-degree subgraph on every corpus fixture plus generated hosts.

bool criterion_half_degree(std::string& detail) {
  std::vector<corpus::Named> graphs = corpus::mixed();
  graphs.push_back({"gnp_200", gen_gnp(200, 0.05, 21)});
  graphs.push_back({"regular_64_16", gen_random_regular(64, 16, 22)});
  graphs.push_back({"blowup_c5_10", gen_blowup(corpus::cycle(5), 10)});
  graphs.push_back({"incidence_4", gen_incidence(4)});
  long vertices = 0;
  for (const auto& f : graphs) {
    BipartiteCut cut = half_degree_bipartite(f.graph);
    for (int v = 0; v < f.graph.n; ++v) {
      ++vertices;
      if (2 * cut.cut_graph.degree(v) < f.graph.degree(v)) {
        detail = fmt("vertex %d of %s keeps less than half its degree", v, f.name.c_str());
        return false;
      }
    }
  }
  detail = fmt("2*deg_cut >= deg held for all %ld vertices over %zu graphs", vertices,
               graphs.size());
  return true;
}

// ---------------------------------------------------------------------------
// 9. Path-family structural claims on every triangle-free fixture, 5 roots.

bool criterion_path_claims(std::string& detail) {
  int families = 0;
  for (const auto& f : corpus::triangle_free()) {
    const Graph& g = f.graph;
    const double d = degree_stats(g).max;
    // Five deterministic roots: highest degree first, id as tie-break.
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    for (int i = 0; i < std::min(5, g.n); ++i) {
      int root = order[i];
      PathFamily pf = build_path_family(g, root, 4);
      PathClaimsReport claims = path_family_claims(pf, d);
      ++families;
      if (!claims.star_structure) {
        detail = fmt("star structure failed on %s root %d: %s", f.name.c_str(), root,
                     claims.star_detail.c_str());
        return false;
      }
      if (!claims.multiplicity) {
        detail = fmt("pair multiplicity %ld above 4d^(1-1/(s-2)) = %.3f on %s root %d",
                     claims.max_pair_multiplicity, claims.degree_bound, f.name.c_str(), root);
        return false;
      }
      if (!claims.middle_degree) {
        detail = fmt("middle-graph degree %ld above %.3f on %s root %d",
                     claims.max_middle_degree, claims.degree_bound, f.name.c_str(), root);
        return false;
      }
    }
  }
  detail = fmt("claims (a), (b), (c) held for %d path families", families);
  return families >= 100;
}

// ---------------------------------------------------------------------------
// 10. Dense-to-clique floors and the G(n, 1/2) median staircase.

bool criterion_dense_to_clique(std::string& detail) {
  if (dense_to_clique(corpus::complete(5)).branches.size() != 5) {
    detail = "K5 did not contract to an order-5 clique minor";
    return false;
  }

  BranchModel pet = dense_to_clique(corpus::petersen());
  if (pet.branches.size() < 4) {
    detail = fmt("petersen gave order %zu < 4", pet.branches.size());
    return false;
  }
  // Independent witness: contracting the five spokes of the Petersen graph
  // (outer vertex i with inner vertex i+5) leaves K5.
  BranchModel spokes = contract_partition(
      corpus::petersen(), {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  if (!verify_minor_model(spokes).valid()) {
    detail = "spoke witness failed verification";
    return false;
  }
  Graph spoke_simple = simplify_multigraph(spokes.model);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!spoke_simple.has_edge(i, j)) {
        detail = "spoke witness is not complete";
        return false;
      }

  auto median_order = [](int n) {
    std::vector<long> orders;
    for (std::uint64_t seed = 501; seed <= 520; ++seed)
      orders.push_back(
          static_cast<long>(dense_to_clique(gen_gnp(n, 0.5, seed)).branches.size()));
    std::sort(orders.begin(), orders.end());
    return (orders[9] + orders[10]) / 2.0;
  };
  double m30 = median_order(30), m60 = median_order(60), m120 = median_order(120);
  detail = fmt("K5 -> 5, petersen -> %zu (spoke K5 verified), medians %.1f <= %.1f <= %.1f",
               pet.branches.size(), m30, m60, m120);
  return m30 <= m60 && m60 <= m120 && m30 >= 2.0;
}

// ---------------------------------------------------------------------------
// 11. End-to-end clique minors from the contraction pipeline, 50 seeds.

bool criterion_end_to_end(std::string& detail) {
  Graph host = gen_blowup(corpus::cycle(5), 4);
  int ok = 0, min_order = 1 << 20;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    PipelineConfig cfg;
    cfg.s = 3;
    cfg.trials = 8;
    cfg.seed = seed;
    KsResult res = ks_pipeline(host, cfg);
    const BranchModel& bm = res.clique_minor;
    int order = static_cast<int>(bm.branches.size());
    min_order = std::min(min_order, order);

    bool valid = res.report.verification_ok() && verify_minor_model(bm).valid();
    Graph simple = simplify_multigraph(bm.model);
    bool complete = true;
    for (int i = 0; i < simple.n && complete; ++i)
      for (int j = i + 1; j < simple.n; ++j)
        if (!simple.has_edge(i, j)) {
          complete = false;
          break;
        }
    bool in_host = bm.host.n == host.n;
    for (const auto& branch : bm.branches)
      for (int v : branch)
        if (v < 0 || v >= host.n) in_host = false;

    if (valid && complete && in_host && order >= 3) {
      ++ok;
    } else {
      detail = fmt("seed %llu: order %d, valid %d, complete %d, in_host %d",
                   static_cast<unsigned long long>(seed), order, valid, complete, in_host);
      return false;
    }
  }
  detail = fmt("50/50 seeds gave verified complete clique minors, smallest order %d", min_order);
  return ok == 50 && min_order >= 3;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double cap_seconds;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"minor validity", 120.0, criterion_minor_validity},
      {"exact activation oracle", 60.0, criterion_exact_oracle},
      {"activation lower bound", 60.0, criterion_activation_lower},
      {"chernoff red-count gate", 30.0, criterion_chernoff},
      {"parallel-edge claim", 60.0, criterion_parallel_edges},
      {"activated-path count bound", 60.0, criterion_activated_count},
      {"cover lemma", 30.0, criterion_cover},
      {"half-degree subgraph", 10.0, criterion_half_degree},
      {"path-family claims", 60.0, criterion_path_claims},
      {"dense-to-clique floor", 120.0, criterion_dense_to_clique},
      {"end-to-end clique minor", 120.0, criterion_end_to_end},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = fmt("exception: %s", e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    if (elapsed > c.cap_seconds) {
      ok = false;
      detail += fmt(" [exceeded %.0fs cap]", c.cap_seconds);
    }
    if (!ok) ++failed;
    std::printf("[%2zu/11] %s  %s: %s  (%.1fs)\n", i + 1, ok ? "PASS" : "FAIL", c.name,
                detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/11 criteria passed\n", criteria.size() - failed);
  return failed == 0 ? 0 : 1;
}
