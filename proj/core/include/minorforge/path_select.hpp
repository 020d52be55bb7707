#ifndef MINORFORGE_PATH_SELECT_HPP
#define MINORFORGE_PATH_SELECT_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/random_minor.hpp"

namespace minorforge {

// Heuristic certificate that a graph kept |N(S)| >= (d^{1-eps}-1)|S| for
// every independent set the search examined. Not a proof; consumers must
// treat gated claims as heuristic when this is the hypothesis.
struct ExpansionCertificate {
  double d = 0.0;
  double eps = 0.0;
  long sets_examined = 0;
  double best_ratio = 0.0;  // smallest |N(S)|/|S| seen
  bool heuristic = true;

  double d_prime() const { return std::pow(d, 1.0 - eps) - 1.0; }
};

// One second-level cover set S_{w,j} inside the star of w, together with
// the one permissible edge chosen for every outside endpoint.
struct SecondLevelGroup {
  int anchor = -1;  // index i of S_i
  int w = -1;       // star center in S_i
  int j = -1;       // cover-set index within w's star
  std::vector<int> set_sj;
  std::vector<std::pair<int, int>> permissible;  // (u, y): u's one edge into S_{w,j}
};

// Family of 3-paths root-w-y-u: w in an anchor set S_i inside N(root),
// y in the cleaned star of w, u reached by a permissible edge.
struct PathFamily {
  int root = -1;
  int s = 0;
  std::vector<std::vector<int>> anchors;  // disjoint independent S_i covering >= |N(root)|/2
  std::vector<std::vector<int>> shells;   // N_i = N(S_i) minus root and N(root)
  // Cleaning: per anchor, each shell vertex keeps exactly one edge to S_i.
  std::vector<std::vector<std::pair<int, int>>> star_assignment;  // (shell vertex, kept center)
  std::vector<SecondLevelGroup> groups;

  struct Entry {
    Path3 path;
    int anchor = -1;
    int group = -1;
  };
  std::vector<Entry> paths;

  std::vector<std::pair<int, std::vector<int>>> by_endpoint;  // u -> path indices, sorted by u
};

// Builds the family for a K_{s-1}-free neighborhood, s >= 3. Anchor sets
// come from ramsey_cover on N(root); each shell vertex keeps its lowest-id
// anchor neighbor; second-level covers and permissible edges follow the
// same lowest-id rule.
PathFamily build_path_family(const Graph& g, int root, int s);

struct MiddleGraph {
  int endpoint = -1;
  std::vector<int> x;  // successors of the root over paths ending at endpoint
  std::vector<int> y;  // predecessors of the endpoint
  std::vector<std::pair<int, int>> edges;  // the middle edges (w, y)
};

// Bipartite middle graph B of the paths from root to `endpoint`. Throws if
// the two sides intersect (malformed family).
MiddleGraph middle_graph(const PathFamily& pf, int endpoint);

struct PathClaimsReport {
  bool star_structure = false;  // middle edges form disjoint stars per anchor
  std::string star_detail;
  bool multiplicity = false;  // per (w, u) path count <= 4 d^{1-1/(s-2)}
  long max_pair_multiplicity = 0;
  bool middle_degree = false;  // max degree of every middle graph, same bound
  long max_middle_degree = 0;
  double degree_bound = 0.0;
  // Size claims, only evaluated under an expansion certificate:
  // |P_i| >= d'^2 |S_i|/4 - 2 d' d and |P| >= d'^3/16.
  bool size_checked = false;
  bool per_anchor_size = false;
  bool total_size = false;

  bool structural_ok() const { return star_structure && multiplicity && middle_degree; }
};

// Structural claims are checked unconditionally; size claims only when an
// expansion certificate supplies d'.
PathClaimsReport path_family_claims(const PathFamily& pf, double d,
                                    const std::optional<ExpansionCertificate>& cert = std::nullopt);

}  // namespace minorforge

#endif
