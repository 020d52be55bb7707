#include "minorforge/path_select.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "minorforge/covers.hpp"

namespace minorforge {

PathFamily build_path_family(const Graph& g, int root, int s) {
  if (root < 0 || root >= g.n) throw std::invalid_argument("build_path_family: root out of range");
  if (s < 3) throw std::invalid_argument("build_path_family: need s >= 3");
  PathFamily pf;
  pf.root = root;
  pf.s = s;

  const std::vector<int>& nb = g.adj[root];
  if (nb.empty()) return pf;

  std::vector<char> forbidden(g.n, 0);
  forbidden[root] = 1;
  for (int w : nb) forbidden[w] = 1;

  // Anchor sets: disjoint independent sets covering half of N(root).
  Induced nbg = induced_subgraph(g, nb);
  CoverResult cover = ramsey_cover(nbg.graph, s - 1);
  for (auto& set : cover.sets) {
    std::vector<int> mapped;
    mapped.reserve(set.size());
    for (int v : set) mapped.push_back(nbg.new_to_old[v]);
    std::sort(mapped.begin(), mapped.end());
    pf.anchors.push_back(std::move(mapped));
  }

  for (size_t i = 0; i < pf.anchors.size(); ++i) {
    const auto& anchor = pf.anchors[i];
    std::vector<char> in_anchor(g.n, 0);
    for (int w : anchor) in_anchor[w] = 1;

    // Shell N_i, and the cleaning step: every shell vertex keeps exactly
    // one edge toward the anchor (lowest center id).
    std::set<int> shell_set;
    for (int w : anchor)
      for (int z : g.adj[w])
        if (!forbidden[z]) shell_set.insert(z);
    std::vector<int> shell(shell_set.begin(), shell_set.end());
    pf.shells.push_back(shell);

    std::vector<std::pair<int, int>> kept;
    std::map<int, std::vector<int>> star;  // center -> kept shell vertices
    for (int z : shell) {
      int center = -1;
      for (int w : g.adj[z])
        if (in_anchor[w]) {
          center = w;
          break;  // adjacency is sorted, first hit is the lowest id
        }
      kept.emplace_back(z, center);
      star[center].push_back(z);
    }
    pf.star_assignment.push_back(std::move(kept));

    for (int w : anchor) {
      auto it = star.find(w);
      if (it == star.end()) continue;
      const std::vector<int>& star_w = it->second;

      // Second-level cover of the cleaned star of w.
      Induced sg = induced_subgraph(g, star_w);
      CoverResult sub = ramsey_cover(sg.graph, s - 1);
      int j = 0;
      for (auto& set : sub.sets) {
        SecondLevelGroup grp;
        grp.anchor = static_cast<int>(i);
        grp.w = w;
        grp.j = j++;
        for (int v : set) grp.set_sj.push_back(sg.new_to_old[v]);
        std::sort(grp.set_sj.begin(), grp.set_sj.end());

        std::vector<char> in_sj(g.n, 0);
        for (int y : grp.set_sj) in_sj[y] = 1;
        std::set<int> endpoints;
        for (int y : grp.set_sj)
          for (int u : g.adj[y])
            if (!forbidden[u]) endpoints.insert(u);
        for (int u : endpoints) {
          int y_pick = -1;
          for (int y : g.adj[u])
            if (in_sj[y]) {
              y_pick = y;
              break;  // lowest-id edge into S_{w,j} is the permissible one
            }
          grp.permissible.emplace_back(u, y_pick);
          PathFamily::Entry e;
          e.path = {root, w, y_pick, u};
          e.anchor = static_cast<int>(i);
          e.group = static_cast<int>(pf.groups.size());
          pf.paths.push_back(e);
        }
        pf.groups.push_back(std::move(grp));
      }
    }
  }

  std::map<int, std::vector<int>> by_u;
  for (size_t idx = 0; idx < pf.paths.size(); ++idx)
    by_u[pf.paths[idx].path.u].push_back(static_cast<int>(idx));
  pf.by_endpoint.assign(by_u.begin(), by_u.end());
  return pf;
}

MiddleGraph middle_graph(const PathFamily& pf, int endpoint) {
  MiddleGraph mg;
  mg.endpoint = endpoint;
  std::set<int> xs, ys;
  for (const auto& e : pf.paths) {
    if (e.path.u != endpoint) continue;
    xs.insert(e.path.x);
    ys.insert(e.path.y);
    mg.edges.emplace_back(e.path.x, e.path.y);
  }
  mg.x.assign(xs.begin(), xs.end());
  mg.y.assign(ys.begin(), ys.end());
  for (int v : mg.x)
    if (ys.count(v)) throw std::runtime_error("middle_graph: sides intersect, family malformed");
  std::sort(mg.edges.begin(), mg.edges.end());
  mg.edges.erase(std::unique(mg.edges.begin(), mg.edges.end()), mg.edges.end());
  return mg;
}

PathClaimsReport path_family_claims(const PathFamily& pf, double d,
                                    const std::optional<ExpansionCertificate>& cert) {
  PathClaimsReport r;
  if (pf.s < 3) throw std::invalid_argument("path_family_claims: family carries s < 3");
  r.degree_bound = 4.0 * std::pow(std::max(d, 0.0), 1.0 - 1.0 / (pf.s - 2));

  // (a) Per anchor, the middle edges (w, y) must form vertex-disjoint stars
  // centered at anchor vertices: one center per y, centers never leaves.
  r.star_structure = true;
  for (size_t i = 0; i < pf.anchors.size() && r.star_structure; ++i) {
    std::map<int, int> center_of;  // y -> w
    std::set<int> centers, leaves;
    for (const auto& e : pf.paths) {
      if (e.anchor != static_cast<int>(i)) continue;
      auto [it, fresh] = center_of.try_emplace(e.path.y, e.path.x);
      if (!fresh && it->second != e.path.x) {
        r.star_structure = false;
        r.star_detail = "leaf " + std::to_string(e.path.y) + " has two centers";
        break;
      }
      centers.insert(e.path.x);
      leaves.insert(e.path.y);
    }
    for (int c : centers)
      if (leaves.count(c)) {
        r.star_structure = false;
        r.star_detail = "vertex " + std::to_string(c) + " is both center and leaf";
        break;
      }
  }

  // (b) Paths through a fixed (w, u) pair.
  std::map<std::pair<int, int>, long> per_wu;
  for (const auto& e : pf.paths) ++per_wu[{e.path.x, e.path.u}];
  for (const auto& [_, c] : per_wu) r.max_pair_multiplicity = std::max(r.max_pair_multiplicity, c);
  r.multiplicity = static_cast<double>(r.max_pair_multiplicity) <= r.degree_bound + 1e-9;

  // (c) Max degree over every endpoint's middle graph.
  r.middle_degree = true;
  for (const auto& [u, _] : pf.by_endpoint) {
    MiddleGraph mg;
    try {
      mg = middle_graph(pf, u);
    } catch (const std::runtime_error&) {
      r.middle_degree = false;
      break;
    }
    std::map<int, long> deg;
    for (auto [a, b] : mg.edges) {
      ++deg[a];
      ++deg[b];
    }
    for (const auto& [_, c] : deg) r.max_middle_degree = std::max(r.max_middle_degree, c);
  }
  if (static_cast<double>(r.max_middle_degree) > r.degree_bound + 1e-9) r.middle_degree = false;

  if (cert) {
    r.size_checked = true;
    const double dp = cert->d_prime();
    r.per_anchor_size = true;
    std::vector<long> per_anchor(pf.anchors.size(), 0);
    for (const auto& e : pf.paths) ++per_anchor[e.anchor];
    for (size_t i = 0; i < pf.anchors.size(); ++i) {
      double need = dp * dp * static_cast<double>(pf.anchors[i].size()) / 4.0 - 2.0 * dp * d;
      if (static_cast<double>(per_anchor[i]) < need) r.per_anchor_size = false;
    }
    r.total_size = static_cast<double>(pf.paths.size()) >= dp * dp * dp / 16.0;
  }
  return r;
}

}  // namespace minorforge
