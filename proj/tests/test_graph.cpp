#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/rng.hpp"

using namespace minorforge;

TEST_CASE("splitmix64 matches the reference stream") {
  // First outputs of the published reference implementation.
  SplitMix64 s0(0);
  CHECK(s0.next() == 0xe220a8397b1dcdafull);
  CHECK(s0.next() == 0x6e789e6aa1b965f4ull);
  CHECK(s0.next() == 0x06c45d188009454full);
  SplitMix64 s1(1);
  CHECK(s1.next() == 0x910a2dec89025cc1ull);
}

TEST_CASE("next_double lands in [0,1) and next_below in range") {
  SplitMix64 s(42);
  for (int i = 0; i < 1000; ++i) {
    double d = s.next_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    CHECK(s.next_below(7) < 7);
  }
}

TEST_CASE("next_below is roughly uniform") {
  SplitMix64 s(7);
  std::vector<long> buckets(6, 0);
  const long draws = 60000;
  for (long i = 0; i < draws; ++i) ++buckets[s.next_below(6)];
  for (long b : buckets) {
    CHECK(b > 9500);
    CHECK(b < 10500);
  }
}

TEST_CASE("substream is deterministic and collision-free on a small grid") {
  CHECK(substream(1, 2, 3) == substream(1, 2, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 4; ++seed)
    for (std::uint64_t a = 0; a < 8; ++a)
      for (std::uint64_t b = 0; b < 8; ++b) seen.insert(substream(seed, a, b));
  CHECK(seen.size() == 4 * 8 * 8);
}

TEST_CASE("from_edges sorts, dedupes and validates") {
  Graph g = Graph::from_edges(4, {{2, 1}, {0, 1}, {1, 2}, {3, 0}});
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adj[1] == std::vector<int>{0, 2});
  CHECK(g.has_edge(0, 3));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK_THROWS(Graph::from_edges(3, {{0, 0}}));
  CHECK_THROWS(Graph::from_edges(3, {{0, 3}}));
  CHECK_THROWS(Graph::from_edges(3, {{-1, 2}}));
}

TEST_CASE("petersen fixture has the textbook shape") {
  Graph g = corpus::petersen();
  CHECK(g.n == 10);
  CHECK(g.edge_count() == 15);
  for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 3);
  DegreeStats ds = degree_stats(g);
  CHECK(ds.min == 3);
  CHECK(ds.max == 3);
  CHECK(ds.avg == doctest::Approx(3.0));
}

TEST_CASE("degree_stats on a star") {
  DegreeStats ds = degree_stats(corpus::star(8));
  CHECK(ds.min == 1);
  CHECK(ds.max == 8);
  CHECK(ds.avg == doctest::Approx(16.0 / 9.0));
}

TEST_CASE("multigraph normalizes keys and accumulates") {
  MultiGraph mg;
  mg.n = 3;
  mg.add(2, 1);
  mg.add(1, 2, 2);
  CHECK(mg.multiplicity(1, 2) == 3);
  CHECK(mg.multiplicity(2, 1) == 3);
  CHECK(mg.multiplicity(0, 1) == 0);
  CHECK_THROWS(mg.add(1, 1));
  Graph s = simplify_multigraph(mg);
  CHECK(s.n == 3);
  CHECK(s.edge_count() == 1);
  CHECK(s.has_edge(1, 2));
}

TEST_CASE("contract_partition computes crossing multiplicities") {
  // C6 with opposite pairs merged: the three branches form a triangle.
  Graph c6 = corpus::cycle(6);
  BranchModel bm = contract_partition(c6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(bm.branches.size() == 3);
  CHECK(bm.model.multiplicity(0, 1) == 1);
  CHECK(bm.model.multiplicity(1, 2) == 1);
  CHECK(bm.model.multiplicity(0, 2) == 1);
  CHECK(verify_minor_model(bm).valid());

  // C4 halved: both crossing edges survive as multiplicity 2.
  BranchModel h = contract_partition(corpus::cycle(4), {{0, 1}, {2, 3}});
  CHECK(h.model.multiplicity(0, 1) == 2);
  CHECK(verify_minor_model(h).valid());
}

TEST_CASE("contract_partition rejects bad partitions") {
  Graph c5 = corpus::cycle(5);
  CHECK_THROWS(contract_partition(c5, {{0, 2}}));         // not connected
  CHECK_THROWS(contract_partition(c5, {{}}));             // empty branch
  CHECK_THROWS(contract_partition(c5, {{0, 1}, {1, 2}}));  // overlap
  CHECK_THROWS(contract_partition(c5, {{0, 7}}));         // out of range
}

TEST_CASE("verify_minor_model catches fabricated witnesses") {
  Graph c6 = corpus::cycle(6);
  BranchModel good = contract_partition(c6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(verify_minor_model(good).valid());

  BranchModel wrong_mult = good;
  wrong_mult.model.edges[{0, 1}] = 5;
  CHECK_FALSE(verify_minor_model(wrong_mult).valid());

  BranchModel phantom = good;
  phantom.model.edges.clear();
  CHECK_FALSE(verify_minor_model(phantom).valid());

  BranchModel overlap = good;
  overlap.branches[0] = {0, 1};
  overlap.branches[1] = {1, 2, 3};
  CHECK_FALSE(verify_minor_model(overlap).valid());

  // A branch whose two vertices are not adjacent in C6, with the crossing
  // multiplicity stated correctly: the only violation is disconnection.
  BranchModel disconnected;
  disconnected.host = c6;
  disconnected.branches = {{0, 2}, {3, 4}};
  disconnected.model.n = 2;
  disconnected.model.add(0, 1, 1);  // the single crossing edge 2-3
  MinorReport rep = verify_minor_model(disconnected);
  CHECK_FALSE(rep.valid());
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].find("not connected") != std::string::npos);
}

TEST_CASE("induced_subgraph relabels monotonically") {
  Graph g = corpus::petersen();
  Induced ind = induced_subgraph(g, {0, 1, 2, 5, 6});
  CHECK(ind.graph.n == 5);
  CHECK(ind.new_to_old == std::vector<int>{0, 1, 2, 5, 6});
  CHECK(ind.old_to_new[5] == 3);
  CHECK(ind.old_to_new[9] == -1);
  // Edges survive iff both endpoints survive.
  long expected = 0;
  std::vector<int> keep = {0, 1, 2, 5, 6};
  for (int u : keep)
    for (int v : keep)
      if (u < v && g.has_edge(u, v)) ++expected;
  CHECK(ind.graph.edge_count() == expected);
  CHECK(ind.graph.has_edge(0, 3));  // 0-5 spoke
  CHECK_FALSE(ind.graph.has_edge(2, 3));
}

TEST_CASE("parse_edge_list handles directives, comments and sparse ids") {
  ParsedGraph p = parse_edge_list("# a comment\n\n10 20\n20 30\n");
  CHECK(p.graph.n == 3);
  CHECK(p.graph.edge_count() == 2);
  CHECK(p.new_to_old == std::vector<std::int64_t>{10, 20, 30});

  ParsedGraph pinned = parse_edge_list("# n=5\n0 1\n3 4\n");
  CHECK(pinned.graph.n == 5);
  CHECK(pinned.graph.degree(2) == 0);
  CHECK(pinned.new_to_old.size() == 5);
}

TEST_CASE("parse_edge_list reports the offending line") {
  using doctest::Contains;
  CHECK_THROWS_WITH(parse_edge_list("0 1\n2\n"), Contains("line 2"));
  CHECK_THROWS_WITH(parse_edge_list("0 1\n1 2 3\n"), Contains("line 2"));
  CHECK_THROWS_WITH(parse_edge_list("0 1\n\n4 4\n"), Contains("line 3"));
  CHECK_THROWS_WITH(parse_edge_list("-1 2\n"), Contains("line 1"));
  CHECK_THROWS_WITH(parse_edge_list("# n=3\n0 5\n"), Contains("line 2"));
  // Junk text must be an error, never an empty graph.
  CHECK_THROWS_WITH(parse_edge_list("garbage here\n"), Contains("line 1"));
  CHECK_THROWS_WITH(parse_edge_list("0 1\nx y\n"), Contains("line 2"));
}

TEST_CASE("edge-list text round-trips every fixture") {
  for (const auto& [name, g] : corpus::mixed()) {
    CAPTURE(name);
    std::string text = write_edge_list(g);
    ParsedGraph back = parse_edge_list(text);
    CHECK(back.graph.n == g.n);
    CHECK(back.graph.adj == g.adj);
    CHECK(write_edge_list(back.graph) == text);
  }
}
