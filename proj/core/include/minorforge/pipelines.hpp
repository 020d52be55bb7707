#ifndef MINORFORGE_PIPELINES_HPP
#define MINORFORGE_PIPELINES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "minorforge/covers.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/path_select.hpp"
#include "minorforge/random_minor.hpp"

namespace minorforge {

enum class PipelineKind { kst, ks };

struct PipelineConfig {
  int s = 2;
  int t = 2;          // kst only
  double eps = 0.05;  // ks only
  std::optional<double> p_override;
  double constant_scale = 1.0;
  int trials = 1;
  std::uint64_t seed = 0;
  long dense_budget = 0;  // 0 = automatic
  int threads = 1;
};

struct PChoice {
  double p = 0.0;
  bool clamped = false;
};

// Density-driven contraction probability: 2^12 sqrt(t) d^{-1/(2(s-1))} for
// the kst pipeline, 2^10 d^{2 eps - 1/(2(s-2))} for the ks pipeline, times
// constant_scale, clamped into (0, 1/2].
PChoice default_p(PipelineKind kind, int s, int t, double eps, double d,
                  double constant_scale = 1.0);

// Per red pair, the surviving activated middle edges after the two pruning
// rules: while two of them are independent delete one, then while at least
// s remain delete one. Leaves at most s-1 per pair, never zero for a pair
// that had any.
struct PruneResult {
  long pruned_6cycles = 0;
  long pruned_stars = 0;
  // (v, u) with v < u -> surviving middle edges (x, y), x chose v.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> surviving;

  long survivor_count() const;
  long max_multiplicity() const;
};

PruneResult prune_activated_witnesses(const Graph& g, const StarDecomposition& sd, int s);

struct PipelineReport {
  // Input and parameters.
  int n = 0;
  long edges = 0;
  int s = 0, t = 0;
  double eps = 0.0;
  double d_used = 0.0;  // degree parameter driving p
  double p = 0.0;
  bool p_clamped = false;
  std::uint64_t seed = 0;
  int trials = 0;
  // Verification flags.
  FreenessCheck::Status freeness = FreenessCheck::skipped;
  bool almost_regular = true;
  bool models_valid = true;
  bool histogram_ok = true;  // every trial kept max multiplicity <= s-1
  bool clique_complete = true;
  // Best trial.
  int best_trial = -1;
  long activated_count = 0;
  long pruned_6cycles = 0;
  long pruned_stars = 0;
  std::map<long, long> parallel_histogram;
  int minor_order = 0;
  double avg_degree_of_minor = 0.0;
  int clique_minor_order = 0;
  // Aggregates over all trials.
  double mean_activated = 0.0;
  double mean_minor_order = 0.0;
  double mean_avg_degree = 0.0;
  double mean_clique_order = 0.0;
  long hist_max_overall = 0;
  // ks-specific trimming stage.
  double trim_threshold = 0.0;
  int trimmed_vertices = 0;

  bool verification_ok() const {
    return models_valid && histogram_ok && clique_complete &&
           freeness != FreenessCheck::counterexample;
  }
};

// Star-contraction pipeline for K_{s,t}-free hosts: bipartite half-degree
// subgraph, seeded contraction trials, per-pair pruning, multiplicity
// accounting. Best trial maximizes the simple minor's average degree.
PipelineReport kst_pipeline(const Graph& g, const PipelineConfig& cfg);

struct KsResult {
  PipelineReport report;
  BranchModel clique_minor;  // best trial, branches in original host ids
};

// Star-contraction pipeline for K_s-free hosts: trim high-degree vertices,
// contract, then run dense_to_clique on the sampled minor and compose the
// witness back into the original host. Best trial maximizes clique order.
KsResult ks_pipeline(const Graph& g, const PipelineConfig& cfg);

struct ExpansionOutcome {
  bool found_set = false;
  std::vector<int> independent_set;
  double target = 0.0;  // n / d^{1-eps}
  int rounds = 0;
  ExpansionCertificate certificate;
};

// Either an independent set of size >= n/d^{1-eps} (by repeatedly removing
// violating sets and their neighborhoods) or a heuristic certificate that
// no violating set was found.
ExpansionOutcome expansion_decompose(const Graph& g, double d, double eps);

// Independent set S with |N(S)| < theta |S|, if the seeded-growth search
// finds one. Requires theta > 1. Every returned set is re-verified.
std::optional<std::vector<int>> find_sparse_independent_set(const Graph& g, double theta);

// Greedy clique-minor extraction: peel to the densest core, grow seed
// branches by best-gain vertex additions and shortest connecting paths,
// prune branches that cannot reach pairwise adjacency. The returned model
// always passes verification and simplifies to a complete graph.
BranchModel dense_to_clique(const Graph& g, long budget = 0);

}  // namespace minorforge

#endif
