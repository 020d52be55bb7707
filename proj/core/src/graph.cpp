#include "minorforge/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace minorforge {

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

long Graph::edge_count() const {
  long deg_sum = 0;
  for (const auto& a : adj) deg_sum += static_cast<long>(a.size());
  return deg_sum / 2;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self loop");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.n == 0) return s;
  s.min = g.degree(0);
  s.max = g.degree(0);
  long total = 0;
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
    total += d;
  }
  s.avg = static_cast<double>(total) / g.n;
  return s;
}

long MultiGraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edges.find({u, v});
  return it == edges.end() ? 0 : it->second;
}

void MultiGraph::add(int u, int v, long m) {
  if (u == v) throw std::invalid_argument("multigraph: self loop");
  if (u > v) std::swap(u, v);
  edges[{u, v}] += m;
}

Graph simplify_multigraph(const MultiGraph& mg) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(mg.edges.size());
  for (const auto& [e, m] : mg.edges)
    if (m > 0) edges.push_back(e);
  return Graph::from_edges(mg.n, edges);
}

namespace {

// True iff `part` induces a connected subgraph of g. Empty parts are not
// connected by convention.
bool part_connected(const Graph& g, const std::vector<int>& part) {
  if (part.empty()) return false;
  std::vector<int> sorted(part);
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> in_part(g.n, 0), seen(g.n, 0);
  for (int v : sorted) in_part[v] = 1;
  std::queue<int> q;
  q.push(sorted[0]);
  seen[sorted[0]] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (in_part[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == sorted.size();
}

// Maps vertex -> branch index, -1 when uncovered. Throws on overlap or
// out-of-range ids.
std::vector<int> branch_index_map(int n, const std::vector<std::vector<int>>& parts) {
  std::vector<int> owner(n, -1);
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int v : parts[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("branch vertex out of range");
      if (owner[v] != -1) throw std::invalid_argument("branches overlap at vertex " + std::to_string(v));
      owner[v] = static_cast<int>(i);
    }
  }
  return owner;
}

MultiGraph crossing_multigraph(const Graph& g, const std::vector<int>& owner, int k) {
  MultiGraph mg;
  mg.n = k;
  for (int v = 0; v < g.n; ++v) {
    if (owner[v] < 0) continue;
    for (int w : g.adj[v]) {
      if (w <= v || owner[w] < 0) continue;
      if (owner[v] != owner[w]) mg.add(owner[v], owner[w]);
    }
  }
  return mg;
}

}  // namespace

BranchModel contract_partition(const Graph& g, const std::vector<std::vector<int>>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("empty branch " + std::to_string(i));
    if (!part_connected(g, parts[i]))
      throw std::invalid_argument("branch " + std::to_string(i) + " is not connected");
  }
  std::vector<int> owner = branch_index_map(g.n, parts);
  BranchModel b;
  b.host = g;
  b.branches.reserve(parts.size());
  for (const auto& p : parts) {
    std::vector<int> sorted(p);
    std::sort(sorted.begin(), sorted.end());
    b.branches.push_back(std::move(sorted));
  }
  b.model = crossing_multigraph(g, owner, static_cast<int>(parts.size()));
  return b;
}

MinorReport verify_minor_model(const BranchModel& b) {
  MinorReport r;
  const int k = static_cast<int>(b.branches.size());
  if (b.model.n != k) {
    r.violations.push_back("model has " + std::to_string(b.model.n) + " vertices, expected " +
                           std::to_string(k));
    return r;
  }
  std::vector<int> owner;
  try {
    owner = branch_index_map(b.host.n, b.branches);
  } catch (const std::invalid_argument& e) {
    r.violations.push_back(e.what());
    return r;
  }
  for (int i = 0; i < k; ++i) {
    if (b.branches[i].empty()) {
      r.violations.push_back("branch " + std::to_string(i) + " is empty");
      continue;
    }
    if (!part_connected(b.host, b.branches[i]))
      r.violations.push_back("branch " + std::to_string(i) + " is not connected");
  }
  if (!r.violations.empty()) return r;

  MultiGraph expected = crossing_multigraph(b.host, owner, k);
  for (const auto& [e, m] : expected.edges) {
    long got = b.model.multiplicity(e.first, e.second);
    if (got != m)
      r.violations.push_back("model edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ") has multiplicity " + std::to_string(got) +
                             ", host crossing count is " + std::to_string(m));
  }
  for (const auto& [e, m] : b.model.edges) {
    if (m < 0)
      r.violations.push_back("negative multiplicity on (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
    if (e.first < 0 || e.second < 0 || e.first >= k || e.second >= k) {
      r.violations.push_back("model edge endpoint out of range");
      continue;
    }
    if (m > 0 && expected.multiplicity(e.first, e.second) == 0)
      r.violations.push_back("model edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ") has no crossing host edge");
  }
  return r;
}

Induced induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> sorted(keep);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 0 || v >= g.n) throw std::invalid_argument("induced_subgraph: vertex out of range");

  Induced r;
  r.old_to_new.assign(g.n, -1);
  r.new_to_old = sorted;
  for (size_t i = 0; i < sorted.size(); ++i) r.old_to_new[sorted[i]] = static_cast<int>(i);
  r.graph = Graph(static_cast<int>(sorted.size()));
  for (int v : sorted)
    for (int w : g.adj[v])
      if (r.old_to_new[w] >= 0) r.graph.adj[r.old_to_new[v]].push_back(r.old_to_new[w]);
  // Neighbor lists inherit sorted order from the monotone relabeling.
  return r;
}

ParsedGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::int64_t declared_n = -1;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      // "# n=K" pins the vertex universe; other comments are ignored.
      std::string comment = line.substr(hash + 1);
      std::istringstream cs(comment);
      std::string word;
      if (cs >> word && word.rfind("n=", 0) == 0 && declared_n < 0 && raw.empty()) {
        try {
          declared_n = std::stoll(word.substr(2));
        } catch (...) {
          throw std::runtime_error("line " + std::to_string(line_no) + ": bad n= directive");
        }
        if (declared_n < 0)
          throw std::runtime_error("line " + std::to_string(line_no) + ": bad n= directive");
      }
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    std::int64_t u, v;
    if (!(ls >> u)) {
      std::istringstream check(line);
      std::string word;
      if (check >> word)
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected two vertex ids");
      continue;  // blank or comment-only line
    }
    if (!(ls >> v))
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected two vertex ids");
    std::string extra;
    if (ls >> extra)
      throw std::runtime_error("line " + std::to_string(line_no) + ": trailing tokens");
    if (u < 0 || v < 0)
      throw std::runtime_error("line " + std::to_string(line_no) + ": negative vertex id");
    if (u == v) throw std::runtime_error("line " + std::to_string(line_no) + ": self loop");
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": edge endpoint exceeds declared n=" + std::to_string(declared_n));
    raw.emplace_back(u, v);
  }

  ParsedGraph out;
  if (declared_n >= 0) {
    out.new_to_old.resize(declared_n);
    for (std::int64_t i = 0; i < declared_n; ++i) out.new_to_old[i] = i;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    out.graph = Graph::from_edges(static_cast<int>(declared_n), edges);
    return out;
  }

  // No directive: remap the sparse ids that actually appear.
  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  out.new_to_old = ids;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  auto dense = [&](std::int64_t id) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (auto [u, v] : raw) edges.emplace_back(dense(u), dense(v));
  out.graph = Graph::from_edges(static_cast<int>(ids.size()), edges);
  return out;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.n << "\n";
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v])
      if (v < w) out << v << " " << w << "\n";
  return out.str();
}

}  // namespace minorforge
