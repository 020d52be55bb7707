#ifndef MINORFORGE_VERIFY_HPP
#define MINORFORGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/random_minor.hpp"

namespace minorforge {

struct Estimate {
  double value = 0.0;
  long trials = 0;
  double std_err = 0.0;  // sqrt(value (1-value) / trials)
};

// Exact probability that every path in `paths` activates simultaneously,
// by summing over all 2^n colorings weighted with the per-blue-vertex
// choice probabilities. Host must have at most 12 vertices.
double exact_activation(const Graph& g, const std::vector<Path3>& paths, double p);

// Monte Carlo frequency of the same event over `trials` decompositions.
Estimate estimate_activation(const Graph& g, const std::vector<Path3>& paths, double p,
                             long trials, std::uint64_t seed);

// One bound comparison. Skipped checks are never passes: the comparison was
// not performed because the bound's preconditions do not hold.
struct BoundCheck {
  enum Status { pass, fail, skipped } status = skipped;
  double bound = 0.0;
  Estimate estimate;
  std::string detail;
};

struct ActivationBoundsReport {
  std::vector<Path3> sampled_paths;
  std::vector<BoundCheck> lower;  // single-path activation vs 1/(2^7 d^2)
  std::vector<Path3> pair;        // two paths sharing both endpoints, if found
  BoundCheck upper;               // simultaneous activation vs coactivation_ub
  bool any_fail() const;
};

// Samples random 3-paths (and a path pair sharing endpoints) from g and
// compares empirical activation frequencies against the analytic bounds,
// with 3-standard-error slack. Checks whose preconditions fail are skipped.
ActivationBoundsReport check_activation_bounds(const Graph& g, double p, long trials,
                                               std::uint64_t seed, int n_paths = 8);

struct ConcentrationReport {
  Estimate freq_above;  // share of trials with #red > 2 p n
  double bound = 0.0;   // exp(-p n / 3)
  BoundCheck::Status status = BoundCheck::skipped;
};

// Chernoff-style check on the red-vertex count of the coloring stage.
ConcentrationReport vertex_concentration(const Graph& g, double p, long trials,
                                         std::uint64_t seed);

}  // namespace minorforge

#endif
