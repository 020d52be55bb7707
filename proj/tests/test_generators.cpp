#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>
#include <vector>

#include "corpus.hpp"
#include "minorforge/covers.hpp"
#include "minorforge/generators.hpp"
#include "minorforge/graph.hpp"

using namespace minorforge;

namespace {

// True iff no two vertices have two common neighbors (no 4-cycle).
bool c4_free(const Graph& g) {
  for (int u = 0; u < g.n; ++u) {
    std::vector<int> paths(g.n, 0);
    for (int w : g.adj[u])
      for (int x : g.adj[w])
        if (x != u && ++paths[x] >= 2) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gnp hits both density extremes") {
  Graph empty = gen_gnp(20, 0.0, 1);
  CHECK(empty.edge_count() == 0);
  Graph full = gen_gnp(20, 1.0, 1);
  CHECK(full.edge_count() == 190);
}

TEST_CASE("gnp is seed-deterministic and seed-sensitive") {
  Graph a = gen_gnp(30, 0.5, 7);
  Graph b = gen_gnp(30, 0.5, 7);
  Graph c = gen_gnp(30, 0.5, 8);
  CHECK(a.adj == b.adj);
  CHECK(a.adj != c.adj);
}

TEST_CASE("gnp edge count concentrates around the mean") {
  // n=100, p=0.2: mean 990, sd ~28.1; four sigmas of slack.
  Graph g = gen_gnp(100, 0.2, 1234);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - 990.0) < 113.0);
}

TEST_CASE("random regular graphs are regular and reproducible") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{20, 3}, {100, 4}, {24, 5}}) {
    Graph g = gen_random_regular(n, d, 99);
    CAPTURE(n);
    for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == d);
    Graph h = gen_random_regular(n, d, 99);
    CHECK(g.adj == h.adj);
  }
  CHECK_THROWS(gen_random_regular(5, 3, 1));   // odd n*d
  CHECK_THROWS(gen_random_regular(4, 4, 1));   // d >= n
  CHECK_THROWS(gen_random_regular(-1, 2, 1));
}

TEST_CASE("blowup matches the direct construction") {
  for (int k = 1; k <= 5; ++k) {
    Graph lib = gen_blowup(corpus::cycle(5), k);
    Graph direct = corpus::c5_blowup(k);
    CAPTURE(k);
    CHECK(lib.n == 5 * k);
    CHECK(lib.adj == direct.adj);
  }
  Graph b3 = gen_blowup(corpus::cycle(5), 3);
  CHECK(b3.edge_count() == 45);
  CHECK(check_ks_free(b3, 3).status == FreenessCheck::verified_free);
}

TEST_CASE("blowup classes stay independent") {
  Graph b = gen_blowup(corpus::petersen(), 3);
  for (int v = 0; v < 10; ++v)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) CHECK_FALSE(b.has_edge(v * 3 + i, v * 3 + j));
}

TEST_CASE("incidence graphs have projective-plane parameters") {
  struct Row {
    int q, vertices;
    long edges;
  };
  // 2(q^2+q+1) vertices and (q^2+q+1)(q+1) edges.
  for (Row r : std::vector<Row>{{2, 14, 21},
                                {3, 26, 52},
                                {4, 42, 105},
                                {5, 62, 186},
                                {7, 114, 456},
                                {8, 146, 657},
                                {9, 182, 910},
                                {11, 266, 1596},
                                {13, 366, 2562}}) {
    Graph g = gen_incidence(r.q);
    CAPTURE(r.q);
    CHECK(g.n == r.vertices);
    CHECK(g.edge_count() == r.edges);
    for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == r.q + 1);
    CHECK(bipartition_of(g).has_value());
    CHECK(c4_free(g));
  }
  CHECK_THROWS(gen_incidence(6));
  CHECK_THROWS(gen_incidence(10));
  CHECK_THROWS(gen_incidence(1));
}

TEST_CASE("smallest incidence graph shares all invariants with the fixture") {
  Graph lib = gen_incidence(2);
  Graph fix = corpus::heawood();
  CHECK(lib.n == fix.n);
  CHECK(lib.edge_count() == fix.edge_count());
  CHECK(c4_free(fix));
  CHECK(bipartition_of(fix).has_value());
  for (int v = 0; v < fix.n; ++v) CHECK(fix.degree(v) == 3);
}
