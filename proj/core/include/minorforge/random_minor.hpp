#ifndef MINORFORGE_RANDOM_MINOR_HPP
#define MINORFORGE_RANDOM_MINOR_HPP

#include <cstdint>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

enum class Color : std::uint8_t { red, blue };

// Outcome of one round of randomized star contraction: every vertex is
// colored, every blue vertex with a red neighbor commits to one of them,
// blue vertices with no red neighbor are isolated and dropped.
struct StarDecomposition {
  std::vector<Color> color;
  std::vector<int> choice;    // chosen red neighbor; -1 for red or isolated
  std::vector<int> isolated;  // sorted blue vertices with no red neighbor
};

// Colors each vertex red with probability p and lets blue vertices pick a
// uniform red neighbor. Every vertex draws from its own substream keyed by
// (seed, trial, vertex), so the outcome is independent of evaluation order
// and identical across thread counts.
StarDecomposition sample_star_decomposition(const Graph& g, double p, std::uint64_t seed,
                                            std::uint64_t trial);

// Contracts every star of the decomposition: one branch per red vertex
// (in increasing vertex order), holding the center and its choosers.
BranchModel build_random_minor(const Graph& g, const StarDecomposition& sd);

// Activated 3-path v-x-y-u: x, y blue and adjacent, x chose v, y chose u,
// v != u. Each blue-blue edge yields at most one such path.
struct Path3 {
  int v, x, y, u;
  bool operator==(const Path3&) const = default;
};

std::vector<Path3> activated_paths(const Graph& g, const StarDecomposition& sd);

// Lower bound 1/(2^7 d^2) on the probability that a fixed 3-path in a graph
// of max degree <= d activates. Valid for 4/d <= p <= 1/2; throws
// std::domain_error outside that range (the bound is inapplicable and must
// not be compared against).
double activation_lb(double d, double p);

// Upper bound 2 p^2 / (d' p / 4)^m on the probability that two paths
// sharing both endpoints, with m internal vertices total, activate
// simultaneously; d' is the minimum degree. Requires m >= 2 and
// 2^7 m ln(m) < p d'; throws std::domain_error otherwise.
double coactivation_ub(double d_prime, double p, int m);

}  // namespace minorforge

#endif
