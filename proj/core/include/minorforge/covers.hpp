#ifndef MINORFORGE_COVERS_HPP
#define MINORFORGE_COVERS_HPP

#include <optional>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

struct BipartiteCut {
  std::vector<int> side;  // 0/1 per vertex
  Graph cut_graph;        // crossing edges only, same vertex ids
};

// Spanning bipartite subgraph in which every vertex keeps at least half of
// its degree. Deterministic local search: flip any vertex with more
// same-side than cross-side neighbors until none remains.
BipartiteCut half_degree_bipartite(const Graph& g);

// Independent set of size >= |V|^{1/(s-1)} / 2 in a K_s-free graph, found by
// recursing into a high-degree neighborhood (with s-1) or, when all degrees
// are small, by min-degree-first greedy extraction. Throws if a K_s is
// discovered (the caller's freeness assertion was wrong) or if the size
// bound fails.
std::vector<int> ramsey_independent_set(const Graph& g, int s);

struct CoverResult {
  std::vector<std::vector<int>> sets;  // disjoint independent sets
  int covered = 0;                     // total vertices covered
  double budget = 0.0;                 // 4 n^{1-1/(s-1)}
};

// Disjoint independent sets covering at least half the vertices of a
// K_s-free graph, by repeated extraction from the uncovered remainder.
CoverResult ramsey_cover(const Graph& g, int s);

// Edge count above which a bipartite graph with parts of size n must
// contain K_{s,t}: (t-1) n^{2-1/s} + s n.
double kst_threshold(int s, int t, int n);

struct KstWitness {
  std::vector<int> left;   // s vertices, complete to right
  std::vector<int> right;  // t vertices
};

// Exhaustive K_{s,t} search in a bipartite graph with the given sides.
// Tries the s-part on both sides. Refuses sides larger than 64 vertices.
std::optional<KstWitness> find_kst(const Graph& g, const std::vector<int>& side_a,
                                   const std::vector<int>& side_b, int s, int t);

// BFS 2-coloring; empty when the graph has an odd cycle.
std::optional<std::vector<int>> bipartition_of(const Graph& g);

// Exhaustive clique search, practical for n <= 100 and k <= 5.
std::optional<std::vector<int>> find_clique(const Graph& g, int k);

struct FreenessCheck {
  enum Status { verified_free, counterexample, skipped } status = skipped;
  std::vector<int> witness;  // K_s vertices, or K_{s,t} vertices (s then t)
};

// Exhaustive K_s-freeness check, skipped above desk scale (n > 100 or s > 5).
FreenessCheck check_ks_free(const Graph& g, int s);

// Exhaustive K_{s,t}-subgraph-freeness check for general graphs, skipped
// when the s-subset enumeration would be too large.
FreenessCheck check_kst_free(const Graph& g, int s, int t);

}  // namespace minorforge

#endif
