#ifndef MINORFORGE_GENERATORS_HPP
#define MINORFORGE_GENERATORS_HPP

#include <cstdint>

#include "minorforge/graph.hpp"

namespace minorforge {

// Erdos-Renyi G(n, p). One seeded draw per vertex pair, row-major order.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Random d-regular graph via the pairing model: match stubs, reject the
// attempt on any loop or parallel edge. Throws after `budget` rejections
// (default 1000) or when n*d is odd / d >= n.
Graph gen_random_regular(int n, int d, std::uint64_t seed, int budget = 1000);

// Replaces every vertex of `base` with an independent set of k copies and
// every edge with a complete bipartite bundle. Copy i of vertex v gets
// id v*k + i.
Graph gen_blowup(const Graph& base, int k);

// Point-line incidence graph of the projective plane of order q: bipartite,
// (q+1)-regular, girth 6, on 2(q^2+q+1) vertices. Points get ids
// 0..q^2+q, lines follow. q must be a prime power <= 13.
Graph gen_incidence(int q);

}  // namespace minorforge

#endif
