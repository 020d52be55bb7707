#ifndef MINORFORGE_GRAPH_HPP
#define MINORFORGE_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace minorforge {

// Simple undirected graph on dense vertex ids 0..n-1.
// Neighbor lists are sorted and duplicate-free; no self loops.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_) {}

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  long edge_count() const;

  // Builds from an edge list; sorts and dedupes, rejects loops and
  // out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

struct DegreeStats {
  int min = 0;
  double avg = 0.0;
  int max = 0;
};

DegreeStats degree_stats(const Graph& g);

// Undirected multigraph: parallel-edge counts keyed by (i, j) with i < j.
struct MultiGraph {
  int n = 0;
  std::map<std::pair<int, int>, long> edges;

  long multiplicity(int u, int v) const;
  void add(int u, int v, long m = 1);
};

// Drops multiplicities, keeps one edge per adjacent pair.
Graph simplify_multigraph(const MultiGraph& mg);

// Witness that `model` is a minor of `host`: branches are disjoint vertex
// sets of the host, each inducing a connected subgraph, and every model
// multiplicity counts exactly the host edges that cross between the two sets.
struct BranchModel {
  Graph host;
  std::vector<std::vector<int>> branches;
  MultiGraph model;
};

struct MinorReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Checks every BranchModel invariant and recomputes all multiplicities.
MinorReport verify_minor_model(const BranchModel& b);

// Contracts the given vertex sets. Parts must be disjoint, nonempty and
// connected in g; vertices covered by no part are dropped silently.
BranchModel contract_partition(const Graph& g, const std::vector<std::vector<int>>& parts);

struct Induced {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for dropped vertices
  std::vector<int> new_to_old;
};

// Induced subgraph on `keep`, relabeled 0..k-1 in increasing old-id order.
Induced induced_subgraph(const Graph& g, const std::vector<int>& keep);

struct ParsedGraph {
  Graph graph;
  std::vector<std::int64_t> new_to_old;  // original ids, one per vertex
};

// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
// ignored. A leading "# n=K" directive pins the vertex universe to 0..K-1
// (needed to round-trip isolated vertices); without it, sparse ids are
// remapped densely and the map is returned.
ParsedGraph parse_edge_list(const std::string& text);

// Canonical edge-list text: "# n=K" directive then sorted "u v" lines, u < v.
std::string write_edge_list(const Graph& g);

}  // namespace minorforge

#endif
