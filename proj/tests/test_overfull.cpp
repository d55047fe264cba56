#include <doctest.h>

#include "helpers.hpp"
#include "splitcolor/generator.hpp"
#include "splitcolor/oracle.hpp"
#include "splitcolor/overfull.hpp"

using namespace splitcolor;
using sc_test::complete;
using sc_test::cycle;
using sc_test::extend;
using sc_test::path;
using sc_test::star;

TEST_CASE("overfull inequality") {
  CHECK(is_overfull(complete(3)));       // 3 > 2*1
  CHECK_FALSE(is_overfull(complete(4))); // 6 <= 3*2
  CHECK(is_overfull(complete(7)));       // 21 > 6*3
}

TEST_CASE("neighborhood-overfull scan for sigma=2 graphs") {
  Graph k7 = complete(7);
  PendantDecomposition pd = pendant_decomposition(k7);
  auto cert = neighborhood_overfull_sigma2(k7, pd);
  REQUIRE(cert.has_value());
  CHECK(cert->neighborhood_size == 7);
  CHECK(cert->edge_count == 21);
  CHECK(cert->delta_local == 6);
  CHECK(cert->slack == 21 - 6 * 3);

  Graph k7yy = named_instance("K7y1y2");  // delta 8, even, universal x1
  pd = pendant_decomposition(k7yy);
  CHECK_FALSE(neighborhood_overfull_sigma2(k7yy, pd).has_value());

  Graph k4p = named_instance("K4p01");  // delta 4 even, core K4 not overfull
  pd = pendant_decomposition(k4p);
  CHECK_FALSE(neighborhood_overfull_sigma2(k4p, pd).has_value());
}

TEST_CASE("neighborhood-overfull scan rejects out-of-class inputs") {
  Graph p4 = path(4);  // a tree: sigma 1
  PendantDecomposition pd = pendant_decomposition(p4);
  CHECK_THROWS_AS(neighborhood_overfull_sigma2(p4, pd), std::invalid_argument);

  Graph k6 = complete(6);  // odd maximum degree
  pd = pendant_decomposition(k6);
  CHECK_THROWS_AS(neighborhood_overfull_sigma2(k6, pd), std::invalid_argument);
}

TEST_CASE("maximum matching fixed values") {
  CHECK(max_matching(complete(4)).size() == 2);
  CHECK(max_matching(star(3)).size() == 1);
  CHECK(max_matching(cycle(5)).size() == 2);
  for (int n = 2; n <= 12; n++)
    CHECK(max_matching(complete(n)).size() == n / 2);
}

TEST_CASE("matching edges are pairwise disjoint") {
  for (uint64_t seed = 1; seed <= 60; seed++) {
    Graph g = sc_test::random_graph(4 + seed % 8, 45, seed * 101);
    MatchingResult r = max_matching(g);
    std::vector<char> used(g.n(), 0);
    for (const Edge& e : r.matching) {
      CHECK(g.has_edge(e.u, e.v));
      CHECK_FALSE(used[e.u]);
      CHECK_FALSE(used[e.v]);
      used[e.u] = used[e.v] = 1;
    }
  }
}

TEST_CASE("blossom matching agrees with the brute-force oracle") {
  int checked = 0;
  for (uint64_t seed = 1; checked < 120; seed++) {
    Graph g = sc_test::random_graph(3 + seed % 10, 40, seed * 977);
    if (g.m() > 24) continue;
    checked++;
    CHECK(max_matching(g).size() == oracle::max_matching_brute(g));
  }
}

TEST_CASE("Hilton condition on fixed graphs") {
  HiltonCheck h = hilton_condition(complete(4));
  CHECK(h.type2);
  CHECK(h.complement_edges == 0);
  CHECK(h.complement_matching == 0);

  h = hilton_condition(named_instance("H6"));
  CHECK(h.type2);
  CHECK(h.complement_edges == 1);
  CHECK(h.complement_matching == 1);

  h = hilton_condition(named_instance("H7"));
  CHECK_FALSE(h.type2);
  CHECK(h.complement_edges == 2);
  CHECK(h.complement_matching == 1);

  CHECK_THROWS_AS(hilton_condition(complete(3)), std::invalid_argument);  // odd order
  CHECK_THROWS_AS(hilton_condition(path(4)), std::invalid_argument);      // no universal vertex
}

TEST_CASE("Hilton verdicts match the exact total chromatic number") {
  CHECK(oracle::total_chromatic_exact(named_instance("H6")) == 7);  // type 2: delta 5
  CHECK(oracle::total_chromatic_exact(named_instance("H7")) == 6);  // type 1: delta 5
}

TEST_CASE("neighborhood-overfull equals subgraph-overfull on split graphs") {
  int checked = 0;
  for (uint64_t seed = 1; checked < 120; seed++) {
    GeneratorParams p;
    p.clique_size = 2 + seed % 7;
    p.independent_count = seed % 4;
    p.pendant_count = seed % 3;
    p.seed = seed * 41;
    GeneratedGraph gg = random_split_graph(p);
    if (gg.graph.n() > 10) continue;
    checked++;
    bool direct = neighborhood_overfull_direct(gg.graph).has_value();
    bool brute = oracle::subgraph_overfull_brute(gg.graph, oracle::OverfullScan::FullSubsets);
    CHECK(direct == brute);
  }
}

TEST_CASE("universal-core scan matches the direct definition on sigma=2 graphs") {
  int checked = 0;
  for (uint64_t seed = 1; checked < 80 && seed < 4000; seed++) {
    GeneratorParams p;
    p.clique_size = 3 + seed % 6;
    p.independent_count = seed % 4;
    p.pendant_count = seed % 3;
    p.delta_parity = DeltaParity::Even;
    p.seed = seed * 53;
    GeneratedGraph gg;
    try {
      gg = random_split_graph(p);
    } catch (const std::invalid_argument&) {
      continue;  // parity unsatisfiable for these counts
    }
    if (stretch_class(gg.graph, gg.partition).sigma != 2) continue;
    checked++;
    PendantDecomposition pd = pendant_decomposition(gg.graph);
    CHECK(neighborhood_overfull_sigma2(gg.graph, pd).has_value() ==
          neighborhood_overfull_direct(gg.graph).has_value());
  }
  CHECK(checked >= 50);
}
