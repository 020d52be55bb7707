#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "corpus.hpp"
#include "minorforge/covers.hpp"
#include "minorforge/graph.hpp"

using namespace minorforge;

namespace {

bool independent_in(const Graph& g, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("half-degree cut keeps half of every degree") {
  for (const auto& [name, g] : corpus::mixed()) {
    CAPTURE(name);
    BipartiteCut cut = half_degree_bipartite(g);
    REQUIRE(cut.side.size() == static_cast<size_t>(g.n));
    REQUIRE(cut.cut_graph.n == g.n);
    for (int v = 0; v < g.n; ++v) {
      CHECK(2 * cut.cut_graph.degree(v) >= g.degree(v));
      CHECK((cut.side[v] == 0 || cut.side[v] == 1));
    }
    for (int v = 0; v < g.n; ++v)
      for (int w : cut.cut_graph.adj[v]) {
        CHECK(g.has_edge(v, w));            // subgraph of g
        CHECK(cut.side[v] != cut.side[w]);  // crossing only
      }
  }
}

TEST_CASE("independent set extraction meets the size floor on K3-free hosts") {
  for (const auto& [name, g] : corpus::triangle_free()) {
    CAPTURE(name);
    REQUIRE(check_ks_free(g, 3).status == FreenessCheck::verified_free);
    std::vector<int> set = ramsey_independent_set(g, 3);
    CHECK(independent_in(g, set));
    CHECK(static_cast<double>(set.size()) >= std::sqrt(static_cast<double>(g.n)) / 2.0 - 1e-9);
  }
}

TEST_CASE("independent set extraction also covers K4-free hosts with triangles") {
  for (const auto& [name, g] : corpus::k4_free_with_triangles()) {
    CAPTURE(name);
    REQUIRE(check_ks_free(g, 4).status == FreenessCheck::verified_free);
    std::vector<int> set = ramsey_independent_set(g, 4);
    CHECK(independent_in(g, set));
    CHECK(static_cast<double>(set.size()) >=
          std::pow(static_cast<double>(g.n), 1.0 / 3.0) / 2.0 - 1e-9);
  }
}

TEST_CASE("independent set extraction refuses hosts with forbidden cliques") {
  CHECK_THROWS(ramsey_independent_set(corpus::complete(5), 3));
  CHECK_THROWS(ramsey_independent_set(corpus::cycle(3), 2));
}

TEST_CASE("edgeless graphs give back everything at s=2") {
  Graph empty = Graph::from_edges(6, {});
  std::vector<int> set = ramsey_independent_set(empty, 2);
  CHECK(set == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("cover of C5 is the frozen two-set cover") {
  CoverResult r = ramsey_cover(corpus::cycle(5), 3);
  REQUIRE(r.sets.size() == 2);
  CHECK(r.sets[0] == std::vector<int>{0, 2});
  CHECK(r.sets[1] == std::vector<int>{1, 3});
  CHECK(r.covered == 4);
}

TEST_CASE("covers reach half the vertices with disjoint independent sets") {
  for (const auto& [name, g] : corpus::triangle_free()) {
    CAPTURE(name);
    CoverResult r = ramsey_cover(g, 3);
    CHECK(r.covered >= (g.n + 1) / 2);
    CHECK(static_cast<double>(r.sets.size()) <= r.budget + 1e-9);
    CHECK(r.budget == doctest::Approx(4.0 * std::sqrt(static_cast<double>(g.n))));
    std::set<int> seen;
    int total = 0;
    for (const auto& s : r.sets) {
      CHECK(independent_in(g, s));
      for (int v : s) {
        CHECK(seen.insert(v).second);  // disjoint
        ++total;
      }
    }
    CHECK(total == r.covered);
  }
}

TEST_CASE("bipartite edge threshold is the frozen curve") {
  CHECK(kst_threshold(2, 2, 10) == doctest::Approx(51.622776601683796));
  CHECK(kst_threshold(2, 3, 10) > kst_threshold(2, 2, 10));
  CHECK(kst_threshold(3, 3, 10) == doctest::Approx(2.0 * std::pow(10.0, 2.0 - 1.0 / 3.0) + 30.0));
  CHECK_THROWS(kst_threshold(0, 2, 10));
  CHECK_THROWS(kst_threshold(3, 2, 10));
  CHECK_THROWS(kst_threshold(2, 2, -1));
}

TEST_CASE("complete bipartite subgraph search finds and refutes") {
  Graph c4 = corpus::cycle(4);
  auto w = find_kst(c4, {0, 2}, {1, 3}, 2, 2);
  REQUIRE(w.has_value());
  CHECK(w->left.size() == 2);
  CHECK(w->right.size() == 2);
  for (int u : w->left)
    for (int v : w->right) CHECK(c4.has_edge(u, v));

  Graph c6 = corpus::cycle(6);
  CHECK_FALSE(find_kst(c6, {0, 2, 4}, {1, 3, 5}, 2, 2).has_value());

  Graph k33 = corpus::complete_bipartite(3, 3);
  auto w33 = find_kst(k33, {0, 1, 2}, {3, 4, 5}, 3, 3);
  REQUIRE(w33.has_value());

  Graph hw = corpus::heawood();
  auto part = bipartition_of(hw);
  REQUIRE(part.has_value());
  std::vector<int> a, b;
  for (int v = 0; v < hw.n; ++v) ((*part)[v] == 0 ? a : b).push_back(v);
  CHECK_FALSE(find_kst(hw, a, b, 2, 2).has_value());
}

TEST_CASE("complete bipartite search validates its inputs") {
  Graph c4 = corpus::cycle(4);
  CHECK_THROWS(find_kst(c4, {0, 1}, {2, 3}, 2, 2));  // edge 0-1 inside a side
  CHECK_THROWS(find_kst(c4, {0, 2}, {2, 3}, 2, 2));  // vertex on both sides
  Graph big = corpus::complete_bipartite(65, 65);
  std::vector<int> left(65), right(65);
  for (int i = 0; i < 65; ++i) {
    left[i] = i;
    right[i] = 65 + i;
  }
  CHECK_THROWS(find_kst(big, left, right, 2, 2));  // side too large
}

TEST_CASE("two-coloring succeeds exactly on bipartite fixtures") {
  auto col = bipartition_of(corpus::heawood());
  REQUIRE(col.has_value());
  Graph hw = corpus::heawood();
  for (int v = 0; v < hw.n; ++v)
    for (int w : hw.adj[v]) CHECK((*col)[v] != (*col)[w]);
  CHECK_FALSE(bipartition_of(corpus::cycle(5)).has_value());
  CHECK_FALSE(bipartition_of(corpus::petersen()).has_value());
  // Disconnected bipartite graph: two squares.
  Graph two = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  CHECK(bipartition_of(two).has_value());
}

TEST_CASE("clique search agrees with known clique numbers") {
  CHECK_FALSE(find_clique(corpus::petersen(), 3).has_value());
  auto k5 = find_clique(corpus::complete(5), 5);
  REQUIRE(k5.has_value());
  CHECK(k5->size() == 5);
  CHECK(find_clique(corpus::octahedron(), 3).has_value());
  CHECK_FALSE(find_clique(corpus::octahedron(), 4).has_value());
  CHECK(find_clique(corpus::wheel(5), 3).has_value());
  CHECK_FALSE(find_clique(corpus::wheel(5), 4).has_value());
}

TEST_CASE("clique freeness verdicts carry checkable witnesses") {
  for (const auto& [name, g] : corpus::triangle_free()) {
    CAPTURE(name);
    CHECK(check_ks_free(g, 3).status == FreenessCheck::verified_free);
  }
  FreenessCheck bad = check_ks_free(corpus::complete(5), 3);
  REQUIRE(bad.status == FreenessCheck::counterexample);
  REQUIRE(bad.witness.size() == 3);
  Graph k5 = corpus::complete(5);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) CHECK(k5.has_edge(bad.witness[i], bad.witness[j]));

  CHECK(check_ks_free(corpus::c5_blowup(25), 3).status == FreenessCheck::skipped);  // n > 100
  CHECK(check_ks_free(corpus::petersen(), 6).status == FreenessCheck::skipped);     // s > 5
}

TEST_CASE("biclique freeness verdicts carry checkable witnesses") {
  CHECK(check_kst_free(corpus::heawood(), 2, 2).status == FreenessCheck::verified_free);
  FreenessCheck bad = check_kst_free(corpus::cycle(4), 2, 2);
  REQUIRE(bad.status == FreenessCheck::counterexample);
  REQUIRE(bad.witness.size() == 4);
  Graph c4 = corpus::cycle(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j) CHECK(c4.has_edge(bad.witness[i], bad.witness[j]));

  CHECK(check_kst_free(corpus::complete_bipartite(3, 3), 2, 2).status ==
        FreenessCheck::counterexample);
  CHECK(check_kst_free(corpus::c5_blowup(12), 5, 5).status == FreenessCheck::skipped);
  CHECK_THROWS(check_kst_free(corpus::cycle(4), 3, 2));
  CHECK_THROWS(check_kst_free(corpus::cycle(4), 0, 2));
}
